#include "slicecheck/exact/interval.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace slicecheck::exact {

Interval::Interval(mpfr_prec_t precision) : prec_(precision) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t precision) : prec_(precision) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const mpq_class& v, mpfr_prec_t precision) : prec_(precision) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.prec_) { *this = std::move(o); }

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        prec_ = o.prec_;
        mpfr_set_prec(lo_, prec_);
        mpfr_set_prec(hi_, prec_);
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::angle(long r, long m, mpfr_prec_t precision) {
    // [2*pi*r/m] with r >= 0, m > 0
    Interval t(precision);
    mpfr_const_pi(t.lo_, MPFR_RNDD);
    mpfr_const_pi(t.hi_, MPFR_RNDU);
    mpfr_mul_si(t.lo_, t.lo_, 2 * r, MPFR_RNDD);
    mpfr_mul_si(t.hi_, t.hi_, 2 * r, MPFR_RNDU);
    mpfr_div_si(t.lo_, t.lo_, m, MPFR_RNDD);
    mpfr_div_si(t.hi_, t.hi_, m, MPFR_RNDU);
    return t;
}

Interval Interval::lipschitz_image(const Interval& theta, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    // |f(a) - f(b)| <= |a - b| for f = cos, sin: evaluate at the lower endpoint
    // with directed rounding and widen by the enclosure width.
    const auto p = theta.prec_;
    Interval out(p);
    mpfr_t width;
    mpfr_init2(width, p);
    mpfr_sub(width, theta.hi_, theta.lo_, MPFR_RNDU);
    fn(out.lo_, theta.lo_, MPFR_RNDD);
    fn(out.hi_, theta.lo_, MPFR_RNDU);
    mpfr_sub(out.lo_, out.lo_, width, MPFR_RNDD);
    mpfr_add(out.hi_, out.hi_, width, MPFR_RNDU);
    mpfr_clear(width);
    if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
    return out;
}

Interval Interval::cos_turn(long r, long m, mpfr_prec_t precision) {
    if (r % m == 0) return Interval(1, precision);
    return lipschitz_image(angle(r, m, precision), &mpfr_cos);
}

Interval Interval::sin_turn(long r, long m, mpfr_prec_t precision) {
    if (r % m == 0) return Interval(0, precision);
    return lipschitz_image(angle(r, m, precision), &mpfr_sin);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

std::optional<Sign> Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return Sign::positive;
    if (mpfr_sgn(hi_) < 0) return Sign::negative;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::zero;
    return std::nullopt;
}

double Interval::midpoint() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

std::string Interval::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "[" << mpfr_get_d(lo_, MPFR_RNDD) << ", " << mpfr_get_d(hi_, MPFR_RNDU) << "]";
    return os.str();
}

Interval Interval::operator-() const {
    Interval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

namespace {

void widen_to(mpfr_prec_t p, mpfr_ptr lo, mpfr_ptr hi) {
    if (mpfr_get_prec(lo) >= p) return;
    mpfr_prec_round(lo, p, MPFR_RNDD);
    mpfr_prec_round(hi, p, MPFR_RNDU);
}

}  // namespace

Interval& Interval::operator+=(const Interval& o) {
    if (o.prec_ > prec_) {
        widen_to(o.prec_, lo_, hi_);
        prec_ = o.prec_;
    }
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& o) { return *this += -o; }

Interval& Interval::operator*=(const Interval& o) {
    const auto p = std::max(prec_, o.prec_);
    mpfr_t cand[4];
    for (auto& c : cand) mpfr_init2(c, p);
    Interval out(p);
    // lower bound
    mpfr_mul(cand[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(cand[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(cand[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(cand[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_min(out.lo_, cand[0], cand[1], MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, cand[2], MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, cand[3], MPFR_RNDD);
    // upper bound
    mpfr_mul(cand[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(cand[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(cand[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(cand[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_max(out.hi_, cand[0], cand[1], MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, cand[2], MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, cand[3], MPFR_RNDU);
    for (auto& c : cand) mpfr_clear(c);
    *this = std::move(out);
    return *this;
}

Interval& Interval::operator/=(const Interval& o) {
    if (o.contains_zero()) throw std::domain_error("interval division by an enclosure of zero");
    Interval inv(o.prec_);
    mpfr_si_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_si_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this *= inv;
}

}  // namespace slicecheck::exact
