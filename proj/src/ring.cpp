#include "acm/ring.hpp"

#include <algorithm>

namespace acm {

Ring::Ring(int nvars, PrimeField field, MonomialOrder order)
    : Ring(nvars, field, order, default_names(nvars)) {}

Ring::Ring(int nvars, PrimeField field, MonomialOrder order, std::vector<std::string> names)
    : nvars_(nvars), field_(field), order_(order), names_(std::move(names)) {
    if (nvars < 1 || nvars > kMaxVars) throw DimensionError("variable count out of range");
    if (static_cast<int>(names_.size()) != nvars) throw DimensionError("name list mismatch");
    if (order.kind == MonomialOrder::Kind::block &&
        (order.block_split < 1 || order.block_split >= nvars))
        throw DimensionError("block split out of range");
}

std::vector<std::string> Ring::default_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    if (nvars == 8) {
        for (int i = 0; i < 8; ++i) names.push_back("y" + std::to_string(i));
    } else if (nvars == 11) {
        for (int i = 0; i < 3; ++i) names.push_back("x" + std::to_string(i));
        for (int i = 0; i < 8; ++i) names.push_back("y" + std::to_string(i));
    } else {
        for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

namespace {

void enumerate(int degree, int nvars, int pos, std::vector<int>& e,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        e[pos] = degree;
        out.emplace_back(nvars, std::span<const int>(e.data(), e.size()));
        return;
    }
    for (int d = degree; d >= 0; --d) {
        e[pos] = d;
        enumerate(degree - d, nvars, pos + 1, e, out);
    }
}

}  // namespace

std::vector<Monomial> graded_basis(int degree, int nvars, const MonomialOrder& ord) {
    if (degree < 0 || nvars < 1) throw DimensionError("invalid graded basis request");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(binomial(degree + nvars - 1, nvars - 1)));
    std::vector<int> e(nvars, 0);
    enumerate(degree, nvars, 0, e, out);
    std::sort(out.begin(), out.end(),
              [&ord](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; });
    return out;
}

}  // namespace acm
