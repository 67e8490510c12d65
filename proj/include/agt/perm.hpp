#pragma once
#include <compare>
#include <string>
#include <vector>

namespace agt {

// Permutation of 0..n-1. Composition reads left to right:
// (a*b)(i) = b(a(i)), i.e. apply a first, then b.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> image);
    static Perm identity(int n);
    static Perm parse_cycles(const std::string& text, int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }
    bool is_identity() const;
    Perm inverse() const;
    std::string cycle_string() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

} // namespace agt
