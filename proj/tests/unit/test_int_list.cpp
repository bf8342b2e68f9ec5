#include <gtest/gtest.h>

#include <stdexcept>

#include "int_list.hpp"

using teamfuse::cli::parse_int_list;

TEST(IntList, Forms) {
    EXPECT_EQ(parse_int_list("20"), (std::vector<std::size_t>{20}));
    EXPECT_EQ(parse_int_list("2..5"), (std::vector<std::size_t>{2, 3, 4, 5}));
    EXPECT_EQ(parse_int_list("10,20"), (std::vector<std::size_t>{10, 20}));
}

TEST(IntList, Rejects) {
    for (const char* bad : {"", "x", "5..2", "1,,2", "-3", "2..", "1.5"}) {
        EXPECT_THROW(parse_int_list(bad), std::invalid_argument) << bad;
    }
}
