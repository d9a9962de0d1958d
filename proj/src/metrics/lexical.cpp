#include "fcgen/metrics/lexical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <zlib.h>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/text.hpp"

namespace fcgen {

namespace {

std::vector<std::string> corpus_tokens(const std::vector<std::string>& corpus) {
    std::vector<std::string> all;
    for (const auto& doc : corpus) {
        auto t = tokenize(doc);
        all.insert(all.end(), t.begin(), t.end());
    }
    if (all.empty()) throw DomainError("corpus has no tokens");
    return all;
}

}  // namespace

double type_token_ratio(const std::vector<std::string>& corpus) {
    const auto tokens = corpus_tokens(corpus);
    const std::set<std::string> distinct(tokens.begin(), tokens.end());
    return static_cast<double>(distinct.size()) / static_cast<double>(tokens.size());
}

double simpson_index(const std::vector<std::string>& corpus) {
    const auto tokens = corpus_tokens(corpus);
    std::map<std::string, std::size_t> counts;
    for (const auto& t : tokens) ++counts[t];
    const double n = static_cast<double>(tokens.size());
    double sum = 0.0;
    for (const auto& [_, c] : counts) sum += (c / n) * (c / n);
    return 1.0 - sum;
}

std::size_t deflate_size(const std::string& data) {
    z_stream zs{};
    if (deflateInit2(&zs, 6, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) throw Error("deflateInit2 failed");
    std::vector<unsigned char> out(deflateBound(&zs, static_cast<uLong>(data.size())) + 16);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_FINISH);
    const std::size_t size = zs.total_out;
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) throw Error("deflate did not finish");
    return size;
}

double compression_ratio_diversity(const std::vector<std::string>& corpus) {
    const std::string joined = join(corpus, "\n");
    if (joined.empty()) throw DomainError("compression ratio: empty corpus");
    return static_cast<double>(deflate_size(joined)) / static_cast<double>(joined.size());
}

double ncd(const std::string& x, const std::string& y) {
    const double cx = static_cast<double>(deflate_size(x));
    const double cy = static_cast<double>(deflate_size(y));
    const double cxy = static_cast<double>(deflate_size(x + y));
    return (cxy - std::min(cx, cy)) / std::max(cx, cy);
}

double ncd_diversity(const std::vector<std::string>& values) {
    if (values.size() < 2) throw DomainError("ncd diversity needs at least two values");
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            sum += ncd(values[i], values[j]);
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

}  // namespace fcgen
