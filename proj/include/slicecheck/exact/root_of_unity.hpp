#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace slicecheck::exact {

/// The root of unity exp(2*pi*i * index / order).
///
/// Two representations of the same complex number (zeta_8^2 and zeta_4) compare
/// equal; ordering is by the reduced (order, index) pair.
class RootOfUnity {
public:
    RootOfUnity(std::int64_t order, std::int64_t index);

    std::int64_t order() const noexcept { return order_; }
    std::int64_t index() const noexcept { return index_; }

    /// Same number, written with gcd(order, index) = 1 (and 1 = (1, 0)).
    RootOfUnity normalized() const;
    /// Order of the multiplicative cyclic group generated by this root.
    std::int64_t primitive_order() const { return normalized().order_; }

    RootOfUnity conjugate() const;
    RootOfUnity pow(std::int64_t p) const;
    bool is_one() const noexcept { return index_ == 0; }

    /// "zeta_m^r" style label; "1" for the trivial root.
    std::string to_string() const;

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
    friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b);

private:
    std::int64_t order_;
    std::int64_t index_;
};

/// zeta_m := exp(2*pi*i/m).
inline RootOfUnity zeta(std::int64_t m) { return {m, m == 1 ? 0 : 1}; }

}  // namespace slicecheck::exact
