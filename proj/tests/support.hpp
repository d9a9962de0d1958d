#pragma once

#include <filesystem>
#include <string>

#include <unistd.h>

#include "fcgen/core/library.hpp"

namespace fcgen::testing {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(FCGEN_FIXTURES) / name; }

inline const FunctionLibrary& fixture_library() {
    static const FunctionLibrary lib = load_function_library(fixture("library.json"));
    return lib;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() / ("fcgen-" + tag + "-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace fcgen::testing
