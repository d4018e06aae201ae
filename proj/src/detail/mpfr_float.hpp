#pragma once

#include <utility>

#include <mpfr.h>

#include "lacunary/rational.hpp"

namespace lacunary::detail {

/// Owning handle for an mpfr_t. Every arithmetic call site chooses its own
/// rounding direction; nothing here rounds implicitly.
class Float {
public:
    explicit Float(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
    ~Float() { mpfr_clear(value_); }

    Float(const Float&) = delete;
    Float& operator=(const Float&) = delete;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

private:
    mpfr_t value_;
};

/// Exact value of a finite float.
inline Rational to_rational(const Float& x) {
    Rational out;
    mpfr_get_q(out.get_mpq_t(), x.get());
    return out;
}

/// Lower and upper directed-rounding enclosure of ln(x) for positive rational x.
inline void log_bounds(const Rational& x, Float& lo, Float& hi) {
    mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
}

inline void log_bounds(const Integer& x, Float& lo, Float& hi) {
    mpfr_set_z(lo.get(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_z(hi.get(), x.get_mpz_t(), MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
}

}  // namespace lacunary::detail
