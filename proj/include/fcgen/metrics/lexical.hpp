#pragma once

#include <string>
#include <vector>

namespace fcgen {

/// Distinct tokens over total tokens of the whole corpus.
double type_token_ratio(const std::vector<std::string>& corpus);

/// 1 - sum p^2 over token frequencies.
double simpson_index(const std::vector<std::string>& corpus);

/// Raw DEFLATE stream size at level 6.
std::size_t deflate_size(const std::string& data);

/// Compressed over raw size of the newline-joined corpus.
double compression_ratio_diversity(const std::vector<std::string>& corpus);

/// (C(xy) - min(C(x), C(y))) / max(C(x), C(y)).
double ncd(const std::string& x, const std::string& y);

/// Mean NCD over unordered pairs. Needs at least two values.
double ncd_diversity(const std::vector<std::string>& values);

}  // namespace fcgen
