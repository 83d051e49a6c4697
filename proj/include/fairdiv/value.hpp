#ifndef FAIRDIV_VALUE_HPP
#define FAIRDIV_VALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace fairdiv {

// Exact rational arithmetic everywhere; fairness decisions never touch floats.
using Value = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical text form: bare integer when the denominator is 1, "p/q" otherwise
// (gcd(p,q)=1, q>0 is maintained by cpp_rational itself).
std::string value_to_string(const Value& v);

// Accepts "p", "-p" and "p/q". Returns nullopt on malformed input or zero denominator.
std::optional<Value> parse_value(const std::string& text);

} // namespace fairdiv

#endif
