#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace lpack
{
    using Rational = boost::rational<std::int64_t>;

    // "p/q", or "p" when q == 1
    auto to_string(const Rational &) -> std::string;

    auto parse_rational(const std::string &) -> Rational;
}
