#ifndef TMK_NUMERIC_HPP
#define TMK_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "tmk/error.hpp"

namespace tmk {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline QVec to_qvec(const IVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

/// v / gcd(entries), sign of the first nonzero entry preserved.
IVec primitive(const IVec& v);

/// Clears denominators and reduces to a primitive integer vector with the
/// same orientation.
IVec primitive(const QVec& v);

bool is_integral(const QVec& v);
IVec to_ivec(const QVec& v);  // requires integral entries

std::string int_to_string(const Int& x);
std::string rat_to_string(const Rat& q);  // "p" or "p/q"
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

}  // namespace tmk

#endif
