#include "slicecheck/exact/root_of_unity.hpp"

#include <numeric>

#include "slicecheck/error.hpp"

namespace slicecheck::exact {

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t index) : order_(order), index_(index) {
    if (order < 1) throw InputError("root of unity order must be positive, got " + std::to_string(order));
    if (index < 0 || index >= order)
        throw InputError("root of unity index " + std::to_string(index) + " outside [0, " + std::to_string(order) + ")");
}

RootOfUnity RootOfUnity::normalized() const {
    if (index_ == 0) return {1, 0};
    const auto g = std::gcd(order_, index_);
    return {order_ / g, index_ / g};
}

RootOfUnity RootOfUnity::conjugate() const { return {order_, (order_ - index_) % order_}; }

RootOfUnity RootOfUnity::pow(std::int64_t p) const {
    auto r = (index_ * (p % order_)) % order_;
    if (r < 0) r += order_;
    return {order_, r};
}

std::string RootOfUnity::to_string() const {
    const auto n = normalized();
    if (n.order_ == 1) return "1";
    if (n.index_ == 1) return "zeta_" + std::to_string(n.order_);
    return "zeta_" + std::to_string(n.order_) + "^" + std::to_string(n.index_);
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    const auto x = a.normalized();
    const auto y = b.normalized();
    return x.order_ == y.order_ && x.index_ == y.index_;
}

std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    const auto x = a.normalized();
    const auto y = b.normalized();
    if (auto c = x.order_ <=> y.order_; c != 0) return c;
    return x.index_ <=> y.index_;
}

}  // namespace slicecheck::exact
