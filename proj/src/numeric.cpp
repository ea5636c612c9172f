#include "tmk/numeric.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace tmk {

IVec primitive(const IVec& v) {
    bool all_zero = true;
    for (const auto& x : v)
        if (x != 0) { all_zero = false; break; }
    if (all_zero) throw Error("ZeroVector", "primitive of the zero vector");
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    IVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IVec primitive(const QVec& v) {
    Int l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, den(q));
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
    return primitive(w);
}

bool is_integral(const QVec& v) {
    for (const auto& q : v)
        if (den(q) != 1) return false;
    return true;
}

IVec to_ivec(const QVec& v) {
    IVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (den(v[i]) != 1) throw Error("NotIntegral", "rational vector is not integral");
        out[i] = num(v[i]);
    }
    return out;
}

std::string int_to_string(const Int& x) { return x.str(); }

std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw Error("ParseError", "bad integer literal '" + s + "'");
    }
}

Rat parse_rat(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, pos));
        Int q(s.substr(pos + 1));
        if (q == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("ParseError", "bad rational literal '" + s + "'");
    }
}

}  // namespace tmk
