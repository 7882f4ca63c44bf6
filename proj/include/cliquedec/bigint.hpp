#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquedec {

using BigInt = boost::multiprecision::cpp_int;

inline auto to_decimal(const BigInt& value) -> std::string { return value.str(); }

inline auto from_decimal(const std::string& text) -> BigInt { return BigInt(text); }

}  // namespace cliquedec
