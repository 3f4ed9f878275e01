#include "topology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pontra::topology {

using snf::Mat;
using snf::mod_pos;

std::shared_ptr<const SimplicialComplex> SimplicialComplex::make(
    std::vector<i64> vertices, const std::vector<std::vector<i64>>& simplices) {
    auto x = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    x->vertices_ = vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) x->vertex_pos_[vertices[i]] = i;

    std::vector<std::set<std::vector<i64>>> per_dim;
    auto insert_with_faces = [&](std::vector<i64> s) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("SimplicialComplex: repeated vertex in a simplex");
        for (i64 v : s)
            if (!x->vertex_pos_.count(v))
                throw std::invalid_argument("SimplicialComplex: simplex uses an unknown vertex");
        std::size_t k = s.size();
        if (per_dim.size() < k) per_dim.resize(k);
        // all nonempty subsets (the face closure)
        for (std::size_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<i64> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(s[b]);
            per_dim[face.size() - 1].insert(face);
        }
    };
    for (i64 v : vertices) insert_with_faces({v});
    for (const auto& s : simplices) {
        if (s.empty()) throw std::invalid_argument("SimplicialComplex: empty simplex");
        insert_with_faces(s);
    }

    x->simplices_.resize(per_dim.size());
    x->index_.resize(per_dim.size());
    for (std::size_t k = 0; k < per_dim.size(); ++k) {
        for (const auto& s : per_dim[k]) {
            x->index_[k][s] = x->simplices_[k].size();
            x->simplices_[k].push_back(s);
        }
    }

    // connected components via union-find over edges
    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    if (x->simplices_.size() > 1)
        for (const auto& e : x->simplices_[1])
            parent[find(x->vertex_pos_.at(e[0]))] = find(x->vertex_pos_.at(e[1]));
    std::map<std::size_t, std::size_t> roots;
    x->component_of_vertex_.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::size_t r = find(i);
        if (!roots.count(r)) roots[r] = roots.size();
        x->component_of_vertex_[i] = roots[r];
    }
    x->component_count_ = roots.size();
    return x;
}

std::size_t SimplicialComplex::count(int k) const {
    if (k < 0 || k >= static_cast<int>(simplices_.size())) return 0;
    return simplices_[static_cast<std::size_t>(k)].size();
}

const std::vector<std::vector<i64>>& SimplicialComplex::simplices(int k) const {
    static const std::vector<std::vector<i64>> empty;
    if (k < 0 || k >= static_cast<int>(simplices_.size())) return empty;
    return simplices_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::vertex_pos(i64 id) const {
    auto it = vertex_pos_.find(id);
    if (it == vertex_pos_.end())
        throw std::invalid_argument("SimplicialComplex: unknown vertex id");
    return it->second;
}

std::optional<std::size_t> SimplicialComplex::simplex_index(int k,
                                                            const std::vector<i64>& verts) const {
    if (k < 0 || k >= static_cast<int>(index_.size())) return std::nullopt;
    auto it = index_[static_cast<std::size_t>(k)].find(verts);
    if (it == index_[static_cast<std::size_t>(k)].end()) return std::nullopt;
    return it->second;
}

Mat SimplicialComplex::delta_matrix(int k) const {
    std::size_t rows = count(k + 1);
    std::size_t cols = count(k);
    Mat m(rows, std::vector<i64>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& tau = simplices(k + 1)[r];
        i64 sign = 1;
        for (std::size_t i = 0; i < tau.size(); ++i) {
            std::vector<i64> face;
            for (std::size_t j = 0; j < tau.size(); ++j)
                if (j != i) face.push_back(tau[j]);
            m[r][simplex_index(k, face).value()] += sign;
            sign = -sign;
        }
    }
    return m;
}

i64 SimplicialComplex::euler_characteristic() const {
    i64 chi = 0;
    i64 sign = 1;
    for (int k = 0; k <= dim(); ++k) {
        chi += sign * static_cast<i64>(count(k));
        sign = -sign;
    }
    return chi;
}

ComplexPtr builtin_complex(const std::string& name) {
    if (name == "point") return SimplicialComplex::make({0}, {{0}});
    if (name == "circle") return SimplicialComplex::make({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
    if (name == "s2")
        return SimplicialComplex::make({0, 1, 2, 3},
                                       {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "rp2")
        return SimplicialComplex::make({1, 2, 3, 4, 5, 6},
                                       {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                                        {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
    if (name == "torus7") {
        std::vector<std::vector<i64>> faces;
        for (i64 i = 0; i < 7; ++i) {
            faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
            faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        return SimplicialComplex::make({0, 1, 2, 3, 4, 5, 6}, faces);
    }
    throw std::invalid_argument("builtin_complex: unknown name '" + name + "'");
}

std::vector<std::string> builtin_complex_names() {
    return {"point", "circle", "torus7", "rp2", "s2"};
}

GroupElement Cochain::at(std::size_t simplex_index) const {
    if (simplex_index >= values.size())
        throw std::invalid_argument("Cochain: simplex index out of range");
    return GroupElement{values[simplex_index]};
}

void Cochain::set(std::size_t simplex_index, const GroupElement& v) {
    if (simplex_index >= values.size())
        throw std::invalid_argument("Cochain: simplex index out of range");
    values[simplex_index] = coeff.element(v.c).c;
}

bool Cochain::operator==(const Cochain& o) const {
    return degree == o.degree && coeff == o.coeff && values == o.values &&
           space.get() == o.space.get();
}

Cochain zero_cochain(const ComplexPtr& x, int degree, const FiniteAbelianGroup& coeff) {
    Cochain c;
    c.space = x;
    c.degree = degree;
    c.coeff = coeff;
    c.values.assign(x->count(degree), std::vector<i64>(coeff.rank(), 0));
    return c;
}

namespace {

void check_same_shape(const Cochain& a, const Cochain& b, const char* who) {
    if (a.space.get() != b.space.get() || a.degree != b.degree || a.coeff != b.coeff)
        throw std::invalid_argument(std::string(who) + ": cochain shape mismatch");
}

}  // namespace

Cochain add(const Cochain& a, const Cochain& b) {
    check_same_shape(a, b, "add");
    Cochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        for (std::size_t k = 0; k < r.coeff.rank(); ++k)
            r.values[i][k] = mod_pos(r.values[i][k] + b.values[i][k], r.coeff.factors()[k]);
    return r;
}

Cochain sub(const Cochain& a, const Cochain& b) { return add(a, neg(b)); }

Cochain neg(const Cochain& a) {
    Cochain r = a;
    for (auto& v : r.values)
        for (std::size_t k = 0; k < r.coeff.rank(); ++k)
            v[k] = mod_pos(-v[k], r.coeff.factors()[k]);
    return r;
}

Cochain scale(i64 s, const Cochain& a) {
    Cochain r = a;
    for (auto& v : r.values)
        for (std::size_t k = 0; k < r.coeff.rank(); ++k)
            v[k] = mod_pos(s % r.coeff.factors()[k] * v[k], r.coeff.factors()[k]);
    return r;
}

Cochain coboundary(const Cochain& c) {
    const auto& x = c.space;
    Cochain r = zero_cochain(x, c.degree + 1, c.coeff);
    for (std::size_t t = 0; t < x->count(c.degree + 1); ++t) {
        const auto& tau = x->simplices(c.degree + 1)[t];
        std::vector<i64> acc(c.coeff.rank(), 0);
        i64 sign = 1;
        for (std::size_t i = 0; i < tau.size(); ++i) {
            std::vector<i64> face;
            for (std::size_t j = 0; j < tau.size(); ++j)
                if (j != i) face.push_back(tau[j]);
            std::size_t fi = x->simplex_index(c.degree, face).value();
            for (std::size_t k = 0; k < c.coeff.rank(); ++k)
                acc[k] += sign * c.values[fi][k];
            sign = -sign;
        }
        for (std::size_t k = 0; k < c.coeff.rank(); ++k)
            r.values[t][k] = mod_pos(acc[k], c.coeff.factors()[k]);
    }
    return r;
}

bool is_cocycle(const Cochain& c) {
    Cochain d = coboundary(c);
    for (const auto& v : d.values)
        for (i64 e : v)
            if (e != 0) return false;
    return true;
}

CohomologyGroup::CohomologyGroup(ComplexPtr x, int degree, FiniteAbelianGroup coeff)
    : x_(std::move(x)), degree_(degree), coeff_(std::move(coeff)) {
    std::size_t c = x_->count(degree);
    Mat a = x_->delta_matrix(degree);
    Mat b;
    if (degree > 0) {
        b = x_->delta_matrix(degree - 1);
    } else {
        b.assign(c, std::vector<i64>{});
    }
    if (b.size() != c) b.assign(c, std::vector<i64>{});

    for (std::size_t j = 0; j < coeff_.rank(); ++j) {
        per_factor_.push_back(snf::quotient_mod(a, b, coeff_.factors()[j]));
        const auto& q = per_factor_.back();
        for (std::size_t l = 0; l < q.factors.size(); ++l) {
            factors_.push_back(q.factors[l]);
            flat_.emplace_back(j, l);
            Cochain rep = zero_cochain(x_, degree_, coeff_);
            for (std::size_t s = 0; s < c; ++s) rep.values[s][j] = q.reps[l][s];
            reps_.push_back(std::move(rep));
        }
    }
}

i64 CohomologyGroup::class_count() const {
    i64 n = 1;
    for (i64 f : factors_) n *= f;
    return n;
}

std::vector<i64> CohomologyGroup::reduce(const Cochain& z) const {
    if (z.space.get() != x_.get() || z.degree != degree_ || !(z.coeff == coeff_))
        throw std::invalid_argument("CohomologyGroup::reduce: cochain shape mismatch");
    if (!is_cocycle(z))
        throw std::invalid_argument("CohomologyGroup::reduce: argument is not a cocycle");
    std::vector<i64> out;
    std::size_t c = x_->count(degree_);
    for (std::size_t j = 0; j < coeff_.rank(); ++j) {
        std::vector<i64> comp(c);
        for (std::size_t s = 0; s < c; ++s) comp[s] = z.values[s][j];
        auto coords = per_factor_[j].reduce(comp);
        out.insert(out.end(), coords.begin(), coords.end());
    }
    return out;
}

Cochain CohomologyGroup::rep_combination(const std::vector<i64>& coords) const {
    if (coords.size() != factors_.size())
        throw std::invalid_argument("CohomologyGroup: coordinate count mismatch");
    Cochain r = zero_cochain(x_, degree_, coeff_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        r = add(r, scale(coords[i], reps_[i]));
    return r;
}

std::vector<std::vector<i64>> CohomologyGroup::all_classes() const {
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur(factors_.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t k = factors_.size();
        while (k-- > 0) {
            if (++cur[k] < factors_[k]) break;
            cur[k] = 0;
            if (k == 0) return out;
        }
        if (factors_.empty()) return out;
    }
}

CohomologyGroup cohomology(const ComplexPtr& x, int degree, const FiniteAbelianGroup& coeff) {
    return CohomologyGroup(x, degree, coeff);
}

namespace {

void check_cup_args(const Cochain& a, const Cochain& b, int da, int db, i64 n, const char* who) {
    if (a.space.get() != b.space.get())
        throw std::invalid_argument(std::string(who) + ": cochains on different complexes");
    if (a.degree != da || b.degree != db)
        throw std::invalid_argument(std::string(who) + ": wrong cochain degrees");
    if (a.coeff.factors() != b.coeff.factors())
        throw std::invalid_argument(std::string(who) + ": factor lists of group and dual differ");
    if (n % a.coeff.exponent() != 0)
        throw std::invalid_argument(std::string(who) +
                                    ": ambient order must be a multiple of the exponent");
}

}  // namespace

Cochain cup11(const Cochain& g, const Cochain& chi, i64 n) {
    check_cup_args(g, chi, 1, 1, n, "cup11");
    const auto& x = g.space;
    Cochain r = zero_cochain(x, 2, FiniteAbelianGroup({n}));
    for (std::size_t t = 0; t < x->count(2); ++t) {
        const auto& tau = x->simplices(2)[t];
        std::size_t front = x->simplex_index(1, {tau[0], tau[1]}).value();
        std::size_t back = x->simplex_index(1, {tau[1], tau[2]}).value();
        r.values[t][0] =
            abelian::pairing_num(g.coeff, GroupElement{g.values[front]},
                                 GroupElement{chi.values[back]}, n);
    }
    return r;
}

Cochain cup01(const Cochain& c, const Cochain& chi, i64 n) {
    check_cup_args(c, chi, 0, 1, n, "cup01");
    const auto& x = c.space;
    Cochain r = zero_cochain(x, 1, FiniteAbelianGroup({n}));
    for (std::size_t e = 0; e < x->count(1); ++e) {
        const auto& edge = x->simplices(1)[e];
        std::size_t v0 = x->simplex_index(0, {edge[0]}).value();
        r.values[e][0] = abelian::pairing_num(c.coeff, GroupElement{c.values[v0]},
                                              GroupElement{chi.values[e]}, n);
    }
    return r;
}

Cochain cup10(const Cochain& g, const Cochain& c, i64 n) {
    check_cup_args(g, c, 1, 0, n, "cup10");
    const auto& x = g.space;
    Cochain r = zero_cochain(x, 1, FiniteAbelianGroup({n}));
    for (std::size_t e = 0; e < x->count(1); ++e) {
        const auto& edge = x->simplices(1)[e];
        std::size_t v1 = x->simplex_index(0, {edge[1]}).value();
        r.values[e][0] = abelian::pairing_num(g.coeff, GroupElement{g.values[e]},
                                              GroupElement{c.values[v1]}, n);
    }
    return r;
}

std::optional<Cochain> solve_coboundary(const Cochain& alpha) {
    if (alpha.degree < 1)
        throw std::invalid_argument("solve_coboundary: degree must be at least 1");
    const auto& x = alpha.space;
    Cochain s = zero_cochain(x, alpha.degree - 1, alpha.coeff);
    bool all_zero = true;
    for (const auto& v : alpha.values)
        for (i64 e : v) all_zero = all_zero && e == 0;
    if (all_zero) return s;

    Mat a = x->delta_matrix(alpha.degree - 1);
    std::size_t m = x->count(alpha.degree);
    for (std::size_t j = 0; j < alpha.coeff.rank(); ++j) {
        std::vector<i64> b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = alpha.values[i][j];
        auto sol = snf::solve_mod(a, b, alpha.coeff.factors()[j]);
        if (!sol) return std::nullopt;
        for (std::size_t i = 0; i < sol->size(); ++i) s.values[i][j] = (*sol)[i];
    }
    if (!(coboundary(s) == alpha))
        throw std::logic_error("solve_coboundary: solver returned a wrong witness");
    return s;
}

CoveringSpace::CoveringSpace(ComplexPtr base, Cochain g)
    : base_(std::move(base)), group_(g.coeff), g_(std::move(g)) {
    if (g_.space.get() != base_.get())
        throw std::invalid_argument("CoveringSpace: cocycle lives on a different complex");
    if (g_.degree != 1)
        throw std::invalid_argument("CoveringSpace: transition data must be a 1-cochain");
    if (!is_cocycle(g_))
        throw std::invalid_argument("CoveringSpace: transition data is not a cocycle");

    i64 n = group_.order();
    std::vector<i64> verts;
    for (std::size_t p = 0; p < base_->vertices().size(); ++p)
        for (i64 h = 0; h < n; ++h) verts.push_back(static_cast<i64>(p) * n + h);

    std::vector<std::vector<i64>> lifted;
    for (int k = 0; k <= base_->dim(); ++k)
        for (const auto& sigma : base_->simplices(k))
            for (i64 h = 0; h < n; ++h) {
                GroupElement base_h = group_.element_at(h);
                std::vector<i64> lift;
                for (std::size_t i = 0; i < sigma.size(); ++i) {
                    GroupElement hi = base_h;
                    if (i > 0) {
                        std::size_t e =
                            base_->simplex_index(1, {sigma[0], sigma[i]}).value();
                        hi = group_.add(base_h, GroupElement{g_.values[e]});
                    }
                    lift.push_back(static_cast<i64>(base_->vertex_pos(sigma[i])) * n +
                                   group_.index_of(hi));
                }
                lifted.push_back(std::move(lift));
            }
    total_ = SimplicialComplex::make(verts, lifted);
}

std::size_t CoveringSpace::total_vertex(std::size_t base_vertex_pos, i64 fibre_index) const {
    return base_vertex_pos * static_cast<std::size_t>(group_.order()) +
           static_cast<std::size_t>(fibre_index);
}

std::pair<std::size_t, i64> CoveringSpace::split_vertex(std::size_t total_vertex_pos) const {
    i64 n = group_.order();
    return {total_vertex_pos / static_cast<std::size_t>(n),
            static_cast<i64>(total_vertex_pos % static_cast<std::size_t>(n))};
}

std::size_t CoveringSpace::project_simplex(int k, std::size_t total_index) const {
    const auto& sigma = total_->simplices(k)[total_index];
    std::vector<i64> proj;
    for (i64 tv : sigma)
        proj.push_back(base_->vertices()[split_vertex(static_cast<std::size_t>(tv)).first]);
    return base_->simplex_index(k, proj).value();
}

i64 CoveringSpace::fibre_at_first_vertex(int k, std::size_t total_index) const {
    const auto& sigma = total_->simplices(k)[total_index];
    return split_vertex(static_cast<std::size_t>(sigma[0])).second;
}

Cochain CoveringSpace::pullback(const Cochain& c) const {
    if (c.space.get() != base_.get())
        throw std::invalid_argument("pullback: cochain does not live on the base");
    Cochain r = zero_cochain(total_, c.degree, c.coeff);
    for (std::size_t t = 0; t < total_->count(c.degree); ++t)
        r.values[t] = c.values[project_simplex(c.degree, t)];
    return r;
}

Cochain CoveringSpace::deck_pullback(const GroupElement& a, const Cochain& c) const {
    if (c.space.get() != total_.get())
        throw std::invalid_argument("deck_pullback: cochain does not live on the total space");
    i64 n = group_.order();
    Cochain r = zero_cochain(total_, c.degree, c.coeff);
    for (std::size_t t = 0; t < total_->count(c.degree); ++t) {
        const auto& sigma = total_->simplices(c.degree)[t];
        std::vector<i64> image;
        for (i64 tv : sigma) {
            auto [bp, h] = split_vertex(static_cast<std::size_t>(tv));
            i64 h2 = group_.index_of(group_.add(group_.element_at(h), a));
            image.push_back(static_cast<i64>(bp) * n + h2);
        }
        std::sort(image.begin(), image.end());
        r.values[t] = c.values[total_->simplex_index(c.degree, image).value()];
    }
    return r;
}

}  // namespace pontra::topology
