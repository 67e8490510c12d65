#include "agt/perm.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "agt/errors.hpp"

namespace agt {

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i]];
    return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
    std::ostringstream out;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (done[i] || img_[i] == i) continue;
        any = true;
        out << '(' << i;
        done[i] = 1;
        for (int j = img_[i]; j != i; j = img_[j]) {
            out << ' ' << j;
            done[j] = 1;
        }
        out << ')';
    }
    return any ? out.str() : "()";
}

Perm Perm::parse_cycles(const std::string& text, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw parse_error("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw parse_error("expected point in cycle notation");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v >= n) throw parse_error("cycle point out of range");
            cyc.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos == text.size()) throw parse_error("unterminated cycle");
        ++pos; // ')'
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[from] != from) throw parse_error("point repeated across cycles");
            img[from] = to;
        }
        skip_ws();
    }
    return Perm(std::move(img));
}

} // namespace agt
