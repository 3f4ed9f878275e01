// Finite simplicial complexes and Cech-style cochain algebra with
// coefficients in a finite abelian group.  Cohomology is computed through
// exact Smith normal form over Z, one cyclic coefficient factor at a time,
// and every class comes with a representative cocycle plus a reduction map
// back to class coordinates.
//
// Conventions fixed across the library:
//   * simplices are stored with ascending vertex order;
//   * a 1-cochain value on the edge (i, j), i < j, is the transition
//     "from chart i to chart j";
//   * (delta c)(v_0..v_k) = sum_i (-1)^i c(v_0..\hat v_i..v_k);
//   * cup products use the Alexander-Whitney front/back face split.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "snf.hpp"

namespace pontra::topology {

using abelian::FiniteAbelianGroup;
using abelian::GroupElement;
using abelian::i64;

class SimplicialComplex {
public:
    // Builds the closure of the given simplices over the given vertex set.
    // Vertex lists may arrive unsorted; duplicate vertices in one simplex
    // are rejected, as are vertices missing from the vertex set.
    static std::shared_ptr<const SimplicialComplex> make(
        std::vector<i64> vertices, const std::vector<std::vector<i64>>& simplices);

    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t count(int k) const;
    const std::vector<i64>& vertices() const { return vertices_; }
    const std::vector<std::vector<i64>>& simplices(int k) const;
    std::size_t vertex_pos(i64 id) const;
    std::optional<std::size_t> simplex_index(int k, const std::vector<i64>& verts) const;

    // Matrix of delta: C^k -> C^{k+1}; rows are (k+1)-simplices.
    snf::Mat delta_matrix(int k) const;

    std::size_t component_count() const { return component_count_; }
    const std::vector<std::size_t>& component_labels() const { return component_of_vertex_; }
    i64 euler_characteristic() const;

private:
    SimplicialComplex() = default;
    std::vector<i64> vertices_;
    std::map<i64, std::size_t> vertex_pos_;
    std::vector<std::vector<std::vector<i64>>> simplices_;
    std::vector<std::map<std::vector<i64>, std::size_t>> index_;
    std::vector<std::size_t> component_of_vertex_;
    std::size_t component_count_ = 0;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Built-in bases: "point", "circle" (3-vertex circle), "torus7"
// (7-vertex torus), "rp2" (6-vertex projective plane), "s2"
// (tetrahedron boundary).
ComplexPtr builtin_complex(const std::string& name);
std::vector<std::string> builtin_complex_names();

struct Cochain {
    ComplexPtr space;
    int degree = 0;
    FiniteAbelianGroup coeff;
    // values[simplex_index] = element coordinates in coeff
    std::vector<std::vector<i64>> values;

    GroupElement at(std::size_t simplex_index) const;
    void set(std::size_t simplex_index, const GroupElement& v);
    bool operator==(const Cochain& o) const;
};

Cochain zero_cochain(const ComplexPtr& x, int degree, const FiniteAbelianGroup& coeff);
Cochain add(const Cochain& a, const Cochain& b);
Cochain sub(const Cochain& a, const Cochain& b);
Cochain neg(const Cochain& a);
Cochain scale(i64 k, const Cochain& a);

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

// H^k(X; A) with A presented as a direct sum of cyclic factors.  Factors,
// representatives and coordinates are flattened over the coefficient
// factors in order.
class CohomologyGroup {
public:
    CohomologyGroup(ComplexPtr x, int degree, FiniteAbelianGroup coeff);

    const std::vector<i64>& factors() const { return factors_; }
    i64 class_count() const;
    const std::vector<Cochain>& reps() const { return reps_; }

    // Class coordinates of a cocycle (throws if the argument is not a
    // cocycle).  All-zero coordinates mean "coboundary".
    std::vector<i64> reduce(const Cochain& z) const;
    // Representative cocycle with the given class coordinates.
    Cochain rep_combination(const std::vector<i64>& coords) const;
    // Every class coordinate tuple, lexicographically.
    std::vector<std::vector<i64>> all_classes() const;

private:
    ComplexPtr x_;
    int degree_;
    FiniteAbelianGroup coeff_;
    std::vector<snf::QuotientGroup> per_factor_;
    std::vector<i64> factors_;
    std::vector<Cochain> reps_;
    std::vector<std::pair<std::size_t, std::size_t>> flat_;  // (coeff factor, local pos)
};

CohomologyGroup cohomology(const ComplexPtr& x, int degree, const FiniteAbelianGroup& coeff);

// Alexander-Whitney cups.  g and chi take values in the same factor list
// (a group and its dual); results are mu_N-valued, N a multiple of the
// exponent.
Cochain cup11(const Cochain& g, const Cochain& chi, i64 n);  // degree 1 x 1 -> 2
Cochain cup01(const Cochain& c, const Cochain& chi, i64 n);  // degree 0 x 1 -> 1
Cochain cup10(const Cochain& g, const Cochain& c, i64 n);    // degree 1 x 0 -> 1

// One s with delta s = alpha, if any.
std::optional<Cochain> solve_coboundary(const Cochain& alpha);

// Covering space of a G-valued 1-cocycle g: vertices (v, h), the edge
// (v_i, v_j), i < j, lifting to ((v_i, h), (v_j, h + g(v_i v_j))).
class CoveringSpace {
public:
    CoveringSpace(ComplexPtr base, Cochain g);

    const ComplexPtr& base() const { return base_; }
    const ComplexPtr& total() const { return total_; }
    const FiniteAbelianGroup& group() const { return group_; }
    const Cochain& cocycle() const { return g_; }

    std::size_t total_vertex(std::size_t base_vertex_pos, i64 fibre_index) const;
    // (base vertex position, fibre element index) of a total-space vertex.
    std::pair<std::size_t, i64> split_vertex(std::size_t total_vertex_pos) const;

    // Base simplex index under the projection.
    std::size_t project_simplex(int k, std::size_t total_index) const;
    // Fibre coordinate of a lifted simplex: the fibre index at its first
    // (lowest base position) vertex.
    i64 fibre_at_first_vertex(int k, std::size_t total_index) const;

    Cochain pullback(const Cochain& c) const;
    // (deck_a^* c)(sigma) = c(deck_a sigma) for a cochain c on the total
    // space, deck_a(v, h) = (v, h + a).
    Cochain deck_pullback(const GroupElement& a, const Cochain& c) const;

private:
    ComplexPtr base_;
    ComplexPtr total_;
    FiniteAbelianGroup group_;
    Cochain g_;
};

}  // namespace pontra::topology
