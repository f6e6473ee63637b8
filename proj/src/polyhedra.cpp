#include "cep/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace cep {

namespace {

bool vector_less(const RationalVector& a, const RationalVector& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return a(i) < b(i);
    return false;
}

bool vector_equal(const RationalVector& a, const RationalVector& b)
{
    return !vector_less(a, b) && !vector_less(b, a);
}

void sort_unique(std::vector<RationalVector>& points)
{
    std::sort(points.begin(), points.end(), vector_less);
    points.erase(std::unique(points.begin(), points.end(), vector_equal), points.end());
}

}  // namespace

HRep HRep::simplex(std::int64_t D)
{
    HRep h;
    h.rows = RationalMatrix::Identity(D, D);
    return h;
}

bool set_equal(const VRep& a, const VRep& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!vector_equal(a.vertices[i], b.vertices[i]))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Double description
// ---------------------------------------------------------------------------

namespace {

struct Ray {
    RationalVector p;  // scaled to coordinate sum 1
    // Active constraints: bits [0, D) are zero coordinates (orthant rows),
    // bits [D, D + num_rows) are processed inequality rows.
    VertexSet active;
};

VertexSet orthant_activity(const RationalVector& p, std::size_t universe)
{
    VertexSet act(universe);
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) == 0)
            act.set(static_cast<std::size_t>(i));
    return act;
}

/// rank of the common active set, split as |zero coordinates| +
/// rank of the active inequality rows with those columns eliminated.
bool rays_adjacent(const Ray& a, const Ray& b, const HRep& h, std::int64_t D)
{
    const VertexSet common = a.active & b.active;
    if (static_cast<std::int64_t>(common.count()) < D - 2)
        return false;

    std::vector<std::size_t> zero_cols;
    std::vector<std::size_t> active_rows;
    for (std::size_t bit = common.find_first(); bit != VertexSet::npos;
         bit = common.find_next(bit)) {
        if (bit < static_cast<std::size_t>(D))
            zero_cols.push_back(bit);
        else
            active_rows.push_back(bit - static_cast<std::size_t>(D));
    }

    const std::int64_t needed = D - 2 - static_cast<std::int64_t>(zero_cols.size());
    if (needed < 0)
        return false;  // cannot exceed D-2 for distinct extreme rays
    if (needed == 0 && active_rows.empty())
        return true;

    std::vector<bool> keep_col(static_cast<std::size_t>(D), true);
    for (std::size_t c : zero_cols)
        keep_col[c] = false;
    RationalMatrix sub(static_cast<Eigen::Index>(active_rows.size()),
                       D - static_cast<Eigen::Index>(zero_cols.size()));
    for (std::size_t r = 0; r < active_rows.size(); ++r) {
        Eigen::Index cc = 0;
        for (Eigen::Index c = 0; c < D; ++c)
            if (keep_col[static_cast<std::size_t>(c)])
                sub(static_cast<Eigen::Index>(r), cc++) = h.rows(static_cast<Eigen::Index>(active_rows[r]), c);
    }
    return exact_rank(sub) == needed;
}

}  // namespace

VRep enumerate_vertices(const HRep& h)
{
    const std::int64_t D = h.dimension();
    const std::int64_t R = h.num_rows();
    const std::size_t universe = static_cast<std::size_t>(D + R);

    std::vector<Ray> rays;
    rays.reserve(static_cast<std::size_t>(D));
    for (std::int64_t i = 0; i < D; ++i) {
        Ray r;
        r.p = RationalVector::Zero(D);
        r.p(i) = 1;
        r.active = orthant_activity(r.p, universe);
        rays.push_back(std::move(r));
    }

    for (std::int64_t row = 0; row < R; ++row) {
        if (h.rows.row(row).isZero())
            continue;  // vacuous inequality; drop before insertion

        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> pos, zero, neg;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            value[j] = h.rows.row(row).dot(rays[j].p);
            if (value[j] > 0)
                pos.push_back(j);
            else if (value[j] < 0)
                neg.push_back(j);
            else
                zero.push_back(j);
        }

        const std::size_t row_bit = static_cast<std::size_t>(D + row);
        if (neg.empty()) {
            for (std::size_t j : zero)
                rays[j].active.set(row_bit);
            continue;
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + zero.size());
        for (std::size_t pi = 0; pi < pos.size(); ++pi) {
            for (std::size_t ni = 0; ni < neg.size(); ++ni) {
                const Ray& rp = rays[pos[pi]];
                const Ray& rn = rays[neg[ni]];
                if (!rays_adjacent(rp, rn, h, D))
                    continue;
                Ray fresh;
                fresh.p = value[pos[pi]] * rn.p - value[neg[ni]] * rp.p;
                Rational total = 0;
                for (Eigen::Index c = 0; c < D; ++c)
                    total += fresh.p(c);
                fresh.p /= total;  // rays lie in the orthant, so total > 0
                fresh.active = rp.active & rn.active;
                fresh.active.set(row_bit);
                next.push_back(std::move(fresh));
            }
        }
        for (std::size_t j : pos)
            next.push_back(std::move(rays[j]));
        for (std::size_t j : zero) {
            rays[j].active.set(row_bit);
            next.push_back(std::move(rays[j]));
        }
        rays = std::move(next);
        if (rays.empty())
            break;  // infeasible
    }

    VRep out;
    out.vertices.reserve(rays.size());
    for (Ray& r : rays)
        out.vertices.push_back(std::move(r.p));
    sort_unique(out.vertices);
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

VRep brute_force_vertices(const HRep& h)
{
    const std::int64_t D = h.dimension();
    const std::int64_t R = h.num_rows();
    VRep out;
    if (R < D - 1)
        return out;

    std::vector<std::int64_t> idx(static_cast<std::size_t>(D - 1));
    for (std::int64_t i = 0; i < D - 1; ++i)
        idx[static_cast<std::size_t>(i)] = i;

    RationalMatrix system(D, D);
    RationalVector rhs = RationalVector::Zero(D);
    rhs(D - 1) = 1;

    while (true) {
        for (std::int64_t r = 0; r < D - 1; ++r)
            system.row(r) = h.rows.row(idx[static_cast<std::size_t>(r)]);
        system.row(D - 1).setConstant(1);

        Eigen::FullPivLU<RationalMatrix> lu(system);
        if (lu.rank() == D) {
            RationalVector p = lu.solve(rhs);
            bool feasible = true;
            for (std::int64_t r = 0; r < R && feasible; ++r)
                feasible = h.rows.row(r).dot(p) >= 0;
            if (feasible)
                out.vertices.push_back(std::move(p));
        }

        // next (D-1)-combination of [0, R)
        std::int64_t k = D - 2;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == R - (D - 1) + k)
            --k;
        if (k < 0)
            break;
        ++idx[static_cast<std::size_t>(k)];
        for (std::int64_t j = k + 1; j < D - 1; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }

    sort_unique(out.vertices);
    return out;
}

// ---------------------------------------------------------------------------
// Dimension, facets, lattice
// ---------------------------------------------------------------------------

int polytope_dimension(const VRep& v)
{
    if (v.empty())
        throw std::invalid_argument("dimension of an empty polytope");
    if (v.size() == 1)
        return 0;
    const Eigen::Index D = v.vertices.front().size();
    RationalMatrix diffs(static_cast<Eigen::Index>(v.size() - 1), D);
    for (std::size_t i = 1; i < v.size(); ++i)
        diffs.row(static_cast<Eigen::Index>(i - 1)) = (v.vertices[i] - v.vertices[0]).transpose();
    return static_cast<int>(exact_rank(diffs));
}

namespace {

std::vector<VertexSet> row_activity(const HRep& h, const VRep& v)
{
    const std::size_t nV = v.size();
    std::vector<VertexSet> active(static_cast<std::size_t>(h.num_rows()), VertexSet(nV));
    for (std::int64_t r = 0; r < h.num_rows(); ++r)
        for (std::size_t j = 0; j < nV; ++j)
            if (h.rows.row(r).dot(v.vertices[j]) == 0)
                active[static_cast<std::size_t>(r)].set(j);
    return active;
}

}  // namespace

Facets irredundant_facets(const HRep& h, const VRep& v)
{
    if (v.empty())
        throw std::invalid_argument("facets of an empty polytope");
    const std::size_t nV = v.size();
    const std::vector<VertexSet> active = row_activity(h, v);

    // group rows by active set; proper nonempty sets only
    std::map<VertexSet, std::vector<int>> groups;
    for (std::size_t r = 0; r < active.size(); ++r) {
        if (active[r].none() || active[r].count() == nV)
            continue;
        groups[active[r]].push_back(static_cast<int>(r));
    }

    // facets are exactly the maximal proper faces among row activity sets
    Facets out;
    for (const auto& [set, rows] : groups) {
        bool maximal = true;
        for (const auto& [other, other_rows] : groups) {
            if (&other == &set)
                continue;
            if ((set & other) == set && set != other) {
                maximal = false;
                break;
            }
        }
        if (!maximal)
            continue;
        out.rows.push_back(rows.front());
        out.multiplicities.push_back(static_cast<int>(rows.size()));
        out.active_sets.push_back(set);
    }

    // deterministic order: by representative row index
    std::vector<std::size_t> order(out.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.rows[a] < out.rows[b]; });
    Facets sorted;
    for (std::size_t i : order) {
        sorted.rows.push_back(out.rows[i]);
        sorted.multiplicities.push_back(out.multiplicities[i]);
        sorted.active_sets.push_back(out.active_sets[i]);
    }
    return sorted;
}

FaceLattice face_lattice(const VRep& v, const Facets& facets, const HRep& h)
{
    const std::size_t nV = v.size();
    VertexSet full(nV);
    full.set();

    // closure of facet vertex sets under intersection
    std::map<VertexSet, int> seen;
    std::vector<VertexSet> sets;
    auto add = [&](const VertexSet& s) {
        if (seen.emplace(s, static_cast<int>(sets.size())).second)
            sets.push_back(s);
    };
    add(full);
    add(VertexSet(nV));
    for (const VertexSet& f : facets.active_sets)
        add(f);
    for (std::size_t head = 0; head < sets.size(); ++head) {
        const VertexSet current = sets[head];
        for (const VertexSet& f : facets.active_sets)
            add(current & f);
    }

    // grade by longest chain; the face lattice of a polytope is graded, so
    // this recovers geometric dimension (empty face at -1)
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sets[a].count() != sets[b].count())
            return sets[a].count() < sets[b].count();
        return sets[a] < sets[b];
    });

    std::vector<int> dim_of(sets.size(), -1);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        if (sets[i].none())
            continue;  // empty face stays at -1
        int best = -1;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const std::size_t j = order[oj];
            if (sets[j] != sets[i] && (sets[j] & sets[i]) == sets[j])
                best = std::max(best, dim_of[j]);
        }
        dim_of[i] = best + 1;
    }

    const std::vector<VertexSet> active = row_activity(h, v);

    FaceLattice lattice;
    lattice.faces.reserve(sets.size());
    std::vector<std::size_t> by_dim(order);
    std::sort(by_dim.begin(), by_dim.end(), [&](std::size_t a, std::size_t b) {
        if (dim_of[a] != dim_of[b])
            return dim_of[a] < dim_of[b];
        return sets[a] < sets[b];
    });
    for (std::size_t i : by_dim) {
        Face face;
        face.vertices = sets[i];
        face.dim = dim_of[i];
        for (std::size_t r = 0; r < active.size(); ++r)
            if ((sets[i] & active[r]) == sets[i])
                face.active_rows.push_back(static_cast<int>(r));
        lattice.faces.push_back(std::move(face));
    }
    lattice.dim = lattice.faces.back().dim;

    for (std::size_t a = 0; a < lattice.faces.size(); ++a)
        for (std::size_t b = 0; b < lattice.faces.size(); ++b)
            if (lattice.faces[b].dim == lattice.faces[a].dim + 1 &&
                (lattice.faces[a].vertices & lattice.faces[b].vertices) ==
                    lattice.faces[a].vertices)
                lattice.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));

    return lattice;
}

std::vector<std::int64_t> f_vector(const FaceLattice& lattice)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(lattice.dim + 2), 0);
    for (const Face& f : lattice.faces)
        ++counts[static_cast<std::size_t>(f.dim + 1)];
    return counts;
}

// ---------------------------------------------------------------------------
// Canonical fingerprint
// ---------------------------------------------------------------------------

namespace {

struct IncidenceGraph {
    std::size_t nV = 0;
    std::size_t nF = 0;
    std::vector<VertexSet> rows;  // per vertex, over facets
    std::vector<VertexSet> cols;  // per facet, over vertices
};

/// Equitable refinement of (row, col) color classes. Class ids are
/// canonical (ranked by signature), so the result is isomorphism-invariant.
void refine(const IncidenceGraph& g, std::vector<int>& row_color, std::vector<int>& col_color)
{
    auto recolor = [](std::vector<std::pair<std::vector<int>, std::size_t>>& sigs,
                      std::vector<int>& color) {
        std::sort(sigs.begin(), sigs.end());
        int next = -1;
        const std::vector<int>* prev = nullptr;
        for (const auto& [sig, idx] : sigs) {
            if (prev == nullptr || sig != *prev)
                ++next;
            color[idx] = next;
            prev = &sig;
        }
        return next + 1;
    };

    while (true) {
        const int before_rows = *std::max_element(row_color.begin(), row_color.end());
        const int before_cols =
            col_color.empty() ? -1 : *std::max_element(col_color.begin(), col_color.end());

        int ncc = before_cols + 1;
        std::vector<std::pair<std::vector<int>, std::size_t>> row_sigs(g.nV);
        for (std::size_t r = 0; r < g.nV; ++r) {
            std::vector<int> sig(static_cast<std::size_t>(ncc) + 1, 0);
            sig[0] = row_color[r];
            for (std::size_t f = g.rows[r].find_first(); f != VertexSet::npos;
                 f = g.rows[r].find_next(f))
                ++sig[1 + static_cast<std::size_t>(col_color[f])];
            row_sigs[r] = {std::move(sig), r};
        }
        const int nrc = recolor(row_sigs, row_color);

        int new_ncc = ncc;
        if (g.nF > 0) {
            std::vector<std::pair<std::vector<int>, std::size_t>> col_sigs(g.nF);
            for (std::size_t f = 0; f < g.nF; ++f) {
                std::vector<int> sig(static_cast<std::size_t>(nrc) + 1, 0);
                sig[0] = col_color[f];
                for (std::size_t r = g.cols[f].find_first(); r != VertexSet::npos;
                     r = g.cols[f].find_next(r))
                    ++sig[1 + static_cast<std::size_t>(row_color[r])];
                col_sigs[f] = {std::move(sig), f};
            }
            new_ncc = recolor(col_sigs, col_color);
        }

        if (nrc == before_rows + 1 && new_ncc == before_cols + 1)
            return;
    }
}

std::string encode_leaf(const IncidenceGraph& g, const std::vector<int>& row_color,
                        const std::vector<int>& col_color)
{
    std::vector<std::size_t> row_perm(g.nV), col_perm(g.nF);
    for (std::size_t r = 0; r < g.nV; ++r)
        row_perm[static_cast<std::size_t>(row_color[r])] = r;
    for (std::size_t f = 0; f < g.nF; ++f)
        col_perm[static_cast<std::size_t>(col_color[f])] = f;

    std::string out;
    auto push_u32 = [&out](std::size_t x) {
        for (int shift = 24; shift >= 0; shift -= 8)
            out.push_back(static_cast<char>((x >> shift) & 0xff));
    };
    push_u32(g.nV);
    push_u32(g.nF);
    unsigned char byte = 0;
    int filled = 0;
    for (std::size_t r = 0; r < g.nV; ++r) {
        for (std::size_t f = 0; f < g.nF; ++f) {
            byte = static_cast<unsigned char>((byte << 1) |
                                              (g.rows[row_perm[r]].test(col_perm[f]) ? 1 : 0));
            if (++filled == 8) {
                out.push_back(static_cast<char>(byte));
                byte = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(byte << (8 - filled)));
    return out;
}

void canonical_search(const IncidenceGraph& g, std::vector<int> row_color,
                      std::vector<int> col_color, std::optional<std::string>& best)
{
    refine(g, row_color, col_color);

    // target cell: first non-singleton row class, then col class
    auto find_cell = [](const std::vector<int>& color) {
        std::vector<int> count;
        for (int c : color) {
            if (static_cast<std::size_t>(c) >= count.size())
                count.resize(static_cast<std::size_t>(c) + 1, 0);
            ++count[static_cast<std::size_t>(c)];
        }
        for (int target = 0; target < static_cast<int>(count.size()); ++target)
            if (count[static_cast<std::size_t>(target)] > 1)
                return target;
        return -1;
    };

    const int row_cell = find_cell(row_color);
    const int col_cell = row_cell >= 0 ? -1 : (g.nF > 0 ? find_cell(col_color) : -1);

    if (row_cell < 0 && col_cell < 0) {
        std::string enc = encode_leaf(g, row_color, col_color);
        if (!best || enc < *best)
            best = std::move(enc);
        return;
    }

    std::vector<int>& colors = (row_cell >= 0) ? row_color : col_color;
    const int cell = (row_cell >= 0) ? row_cell : col_cell;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == cell)
            members.push_back(i);

    for (std::size_t m : members) {
        std::vector<int> rc(row_color), cc(col_color);
        std::vector<int>& split = (row_cell >= 0) ? rc : cc;
        for (int& c : split)
            c *= 2;
        split[m] -= 1;  // individualized member precedes the rest of its class
        canonical_search(g, std::move(rc), std::move(cc), best);
    }
}

}  // namespace

std::string canonical_incidence_key(const std::vector<VertexSet>& vertex_rows,
                                    std::size_t num_facets)
{
    IncidenceGraph g;
    g.nV = vertex_rows.size();
    g.nF = num_facets;
    g.rows = vertex_rows;
    g.cols.assign(num_facets, VertexSet(g.nV));
    for (std::size_t r = 0; r < g.nV; ++r)
        for (std::size_t f = vertex_rows[r].find_first(); f != VertexSet::npos;
             f = vertex_rows[r].find_next(f))
            g.cols[f].set(r);

    std::optional<std::string> best;
    canonical_search(g, std::vector<int>(g.nV, 0), std::vector<int>(g.nF, 0), best);
    return *best;
}

std::string CombinatorialType::key_hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(canonical_key.size() * 2);
    for (unsigned char c : canonical_key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

CombinatorialType combinatorial_fingerprint(const VRep& v, const Facets& facets, const HRep& h)
{
    const std::size_t nV = v.size();
    const std::size_t nF = facets.active_sets.size();
    std::vector<VertexSet> rows(nV, VertexSet(nF));
    for (std::size_t f = 0; f < nF; ++f)
        for (std::size_t r = facets.active_sets[f].find_first(); r != VertexSet::npos;
             r = facets.active_sets[f].find_next(r))
            rows[r].set(f);

    CombinatorialType type;
    type.canonical_key = canonical_incidence_key(rows, nF);
    type.dimension = polytope_dimension(v);
    type.f_vector = f_vector(face_lattice(v, facets, h));
    return type;
}

}  // namespace cep
