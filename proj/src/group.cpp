#include "latfree/group.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace latfree {

void FinGroup::finish_validation() {
    std::size_t n = size_;
    if (n == 0 || mul_.size() != n) throw group_axiom_error("empty or ragged multiplication table");
    for (std::size_t i = 0; i < n; ++i) {
        if (mul_[i].size() != n) throw group_axiom_error("ragged multiplication table row");
        for (int v : mul_[i])
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw group_axiom_error("table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (mul_[0][i] != static_cast<int>(i) || mul_[i][0] != static_cast<int>(i))
            throw group_axiom_error("element 0 is not an identity at element " + std::to_string(i));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw group_axiom_error("associativity fails at triple (" + std::to_string(a) +
                                            "," + std::to_string(b) + "," + std::to_string(c) + ")");
    inv_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (mul_[i][j] == 0 && mul_[j][i] == 0) {
                inv_[i] = static_cast<int>(j);
                break;
            }
        if (inv_[i] < 0)
            throw group_axiom_error("no two-sided inverse for element " + std::to_string(i));
    }
    abelian_ = true;
    for (std::size_t i = 0; i < n && abelian_; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (mul_[i][j] != mul_[j][i]) {
                abelian_ = false;
                break;
            }
    order_.assign(n, 0);
    exponent_ = 1;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned long o = 1;
        int x = static_cast<int>(i);
        while (x != 0) {
            x = mul_[x][i];
            ++o;
        }
        order_[i] = (i == 0) ? 1 : o;
        exponent_ = std::lcm(exponent_, order_[i]);
    }
    if (names_.size() != n) {
        names_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            if (names_[i].empty()) names_[i] = "g" + std::to_string(i);
    }
}

FinGroup FinGroup::from_table(std::vector<std::vector<int>> mul, std::vector<std::string> names,
                              std::string spec_string) {
    FinGroup g;
    g.size_ = mul.size();
    g.mul_ = std::move(mul);
    g.names_ = std::move(names);
    g.spec_ = std::move(spec_string);
    g.finish_validation();
    return g;
}

FinGroup FinGroup::cyclic(unsigned long n) {
    if (n == 0) throw group_axiom_error("cyclic group of order 0");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (unsigned long i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        for (unsigned long j = 0; j < n; ++j) mul[i][j] = static_cast<int>((i + j) % n);
    }
    return from_table(std::move(mul), std::move(names), "C" + std::to_string(n));
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
    std::size_t n = a.size() * b.size();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    auto id = [&](int i, int j) { return i * static_cast<int>(b.size()) + j; };
    for (std::size_t i1 = 0; i1 < a.size(); ++i1)
        for (std::size_t j1 = 0; j1 < b.size(); ++j1) {
            names[id(i1, j1)] = "(" + a.name(i1) + "," + b.name(j1) + ")";
            for (std::size_t i2 = 0; i2 < a.size(); ++i2)
                for (std::size_t j2 = 0; j2 < b.size(); ++j2)
                    mul[id(i1, j1)][id(i2, j2)] = id(a.mul(i1, i2), b.mul(j1, j2));
        }
    return from_table(std::move(mul), std::move(names), a.spec_string() + "x" + b.spec_string());
}

FinGroup FinGroup::parse(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) {
        std::string path = spec.substr(6);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open group table file: " + path);
        nlohmann::json j;
        in >> j;
        std::vector<std::vector<int>> mul = j.at("mul").get<std::vector<std::vector<int>>>();
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        if (j.contains("size") && j.at("size").get<std::size_t>() != mul.size())
            throw group_axiom_error("size field disagrees with table in " + path);
        return from_table(std::move(mul), std::move(names), spec);
    }
    // grammar: C<n> | C<n>xC<m>x...
    std::vector<unsigned long> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'C' && spec[pos] != 'c')
            throw std::invalid_argument("bad group spec '" + spec + "' (expected C<n>[xC<m>...])");
        std::size_t end = pos + 1;
        while (end < spec.size() && isdigit(static_cast<unsigned char>(spec[end]))) ++end;
        if (end == pos + 1) throw std::invalid_argument("bad group spec '" + spec + "'");
        factors.push_back(std::stoul(spec.substr(pos + 1, end - pos - 1)));
        pos = end;
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X')
                throw std::invalid_argument("bad group spec '" + spec + "'");
            ++pos;
            if (pos == spec.size()) throw std::invalid_argument("trailing x in group spec");
        }
    }
    if (factors.empty()) throw std::invalid_argument("empty group spec");
    FinGroup g = cyclic(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic(factors[i]));
    return g;
}

std::map<unsigned long, unsigned long> FinGroup::cyclic_subgroup_counts() const {
    std::map<unsigned long, unsigned long> by_order;
    for (std::size_t i = 0; i < size_; ++i) by_order[order_[i]]++;
    std::map<unsigned long, unsigned long> t;
    for (const auto& [d, count] : by_order) {
        unsigned long phi = euler_phi(d);
        if (count % phi != 0)
            throw std::logic_error("element order census inconsistent at order " + std::to_string(d));
        t[d] = count / phi;
    }
    return t;
}

std::vector<unsigned long> FinGroup::order_multiset() const {
    std::vector<unsigned long> v = order_;
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace latfree
