#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dw {

/// Library-wide error type; the CLI maps it to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Elt = int;

/// A finite group as an indexed multiplication table. Index 0 is always the
/// identity. Immutable after construction; cheap to query, safe to share.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_table(std::string name, int order,
                                  const std::vector<int>& table,
                                  std::vector<std::string> labels = {});

    int order() const { return order_; }
    Elt mul(Elt a, Elt b) const { return mul_[size_t(a) * order_ + b]; }
    Elt inv(Elt a) const { return inv_[a]; }
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
    Elt power(Elt a, long long k) const;
    int element_order(Elt a) const;
    bool commutes(Elt a, Elt b) const { return mul(a, b) == mul(b, a); }

    const std::string& name() const { return name_; }
    const std::string& label(Elt g) const { return labels_[g]; }
    std::optional<Elt> element_by_label(const std::string& s) const;

    // Matrix view, populated for SL(d,p) constructors. Entries row-major mod p.
    bool has_matrix_view() const { return mat_dim_ > 0; }
    int matrix_dim() const { return mat_dim_; }
    int matrix_mod() const { return mat_mod_; }
    const std::vector<int>& matrix_of(Elt g) const { return mats_[g]; }
    std::optional<Elt> element_by_matrix(const std::vector<int>& m) const;

    static constexpr Elt id = 0;
    static constexpr int max_order = 10000;

    // Constructor plumbing for the SL(d,p) builders; not for general use.
    void attach_matrix_view(int d, int p, std::vector<std::vector<int>> mats);

private:
    int order_ = 1;
    std::vector<uint16_t> mul_{0};
    std::vector<uint16_t> inv_{0};
    std::vector<std::string> labels_{"e"};
    std::string name_ = "Z:1";
    int mat_dim_ = 0, mat_mod_ = 0;
    std::vector<std::vector<int>> mats_;
};

/// Parses a group spec: Z:n, S:n, D:n, Q8, SL2:p, SL3:p, prod(a,b), table:path.
FiniteGroup make_group(const std::string& spec);

struct ConjugacyClassTable {
    std::vector<std::vector<Elt>> classes;  // sorted members, classes ordered by rep
    std::vector<Elt> rep;                   // minimal-index representative per class
    std::vector<int> class_of;              // element -> class index
};

ConjugacyClassTable conjugacy_classes(const FiniteGroup& G);

/// {g : gs = sg for all s in S}; the whole group for S = {}.
std::vector<Elt> centralizer(const FiniteGroup& G, const std::vector<Elt>& S);

/// Subgroup generated by the given elements (closure of the set itself is
/// required: throws if not closed).
struct Subgroup {
    FiniteGroup group;
    std::vector<Elt> embed;  // subgroup index -> ambient index
};
Subgroup subgroup_as_group(const FiniteGroup& G, const std::vector<Elt>& elements,
                           const std::string& name = "");

bool is_prime(int n);

}  // namespace dw
