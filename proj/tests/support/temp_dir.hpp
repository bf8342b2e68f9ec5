#pragma once

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

namespace teamfuse::fixture {

/// Fresh directory named after the running test (or `name` outside a test
/// body), removed on destruction.
class TempDir {
public:
    TempDir() : TempDir(current_test_name()) {}
    explicit TempDir(const std::string& name)
        : path_(std::filesystem::temp_directory_path() / ("teamfuse_" + name)) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    static std::string current_test_name() {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        return std::string(info->test_suite_name()) + "_" + info->name();
    }

    std::filesystem::path path_;
};

}  // namespace teamfuse::fixture
