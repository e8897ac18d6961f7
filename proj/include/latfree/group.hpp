#pragma once

#include "latfree/numeric.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace latfree {

struct group_axiom_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite group as an explicit multiplication table. Element 0 is the
// identity; mul[i][j] is the index of the product of elements i and j.
class FinGroup {
  public:
    static FinGroup parse(const std::string& spec);
    static FinGroup from_table(std::vector<std::vector<int>> mul, std::vector<std::string> names,
                               std::string spec_string = "table");
    static FinGroup cyclic(unsigned long n);
    static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

    std::size_t size() const { return size_; }
    int mul(int i, int j) const { return mul_[i][j]; }
    int inv(int i) const { return inv_[i]; }
    const std::string& name(int i) const { return names_[i]; }
    bool abelian() const { return abelian_; }
    unsigned long exponent() const { return exponent_; }
    unsigned long element_order(int i) const { return order_[i]; }
    const std::string& spec_string() const { return spec_; }

    // t_d = #{cyclic subgroups of order d}, for every divisor d of the exponent
    std::map<unsigned long, unsigned long> cyclic_subgroup_counts() const;

    // sorted multiset of element orders, used to fingerprint table groups
    std::vector<unsigned long> order_multiset() const;

  private:
    FinGroup() = default;
    void finish_validation();

    std::size_t size_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::vector<unsigned long> order_;
    bool abelian_ = true;
    unsigned long exponent_ = 1;
    std::string spec_;
};

}  // namespace latfree
