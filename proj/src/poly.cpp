#include "lagsieve/poly.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace lagsieve {

namespace {
const Int kZeroInt{0};
const Rat kZeroRat{0};
} // namespace

IntPoly IntPoly::monomial(std::size_t deg, Int lead) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(lead);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::operator[](std::size_t j) const {
    return j < c_.size() ? c_[j] : kZeroInt;
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = Int(j) * c_[j];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::substitute_square() const {
    if (c_.empty()) return IntPoly();
    std::vector<Int> d(2 * c_.size() - 1, Int(0));
    for (std::size_t j = 0; j < c_.size(); ++j) d[2 * j] = c_[j];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::mirror_x() const {
    std::vector<Int> d = c_;
    std::size_t n = c_.size() ? c_.size() - 1 : 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if ((n - j) % 2) d[j] = -d[j];
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] + b[j];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] - b[j];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& k, const IntPoly& p) {
    std::vector<Int> c = p.c_;
    for (auto& x : c) x *= k;
    return IntPoly(std::move(c));
}

IntPoly::DivRem IntPoly::divrem(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("IntPoly::divrem: zero divisor");
    Int lead = divisor.leading();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("IntPoly::divrem: divisor leading coefficient must be +-1");
    std::vector<Int> rem = c_;
    std::int64_t dd = divisor.degree();
    std::int64_t qd = degree() - dd;
    if (qd < 0) return {IntPoly(), *this};
    std::vector<Int> quot(qd + 1, Int(0));
    for (std::int64_t k = qd; k >= 0; --k) {
        Int q = rem[k + dd] * lead;   // lead is its own inverse
        quot[k] = q;
        if (q == 0) continue;
        for (std::int64_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
    return divrem(divisor).rem.is_zero();
}

std::string IntPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : c_) arr.push_back(v.str());
    return arr.dump();
}

IntPoly IntPoly::from_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("IntPoly::from_json: expected array");
    std::vector<Int> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t j = degree(); j >= 0; --j) {
        const Int& v = c_[j];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Int a = abs(v);
        if (a != 1 || j == 0) os << a.str();
        if (j > 0) {
            if (a != 1) os << "*";
            os << var;
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::operator[](std::size_t j) const {
    return j < c_.size() ? c_[j] : kZeroRat;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = Rat(j) * c_[j];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::substitute_square() const {
    if (c_.empty()) return RatPoly();
    std::vector<Rat> d(2 * c_.size() - 1, Rat(0));
    for (std::size_t j = 0; j < c_.size(); ++j) d[2 * j] = c_[j];
    return RatPoly(std::move(d));
}

Int RatPoly::common_denominator() const {
    Int l = 1;
    for (const auto& v : c_) {
        Int d = denominator(v);
        l = l / gcd(l, d) * d;
    }
    return l;
}

IntPoly RatPoly::cleared() const {
    Int l = common_denominator();
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(numerator(v) * (l / denominator(v)));
    return IntPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] + b[j];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] - b[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& k, const RatPoly& p) {
    std::vector<Rat> c = p.c_;
    for (auto& x : c) x *= k;
    return RatPoly(std::move(c));
}

} // namespace lagsieve
