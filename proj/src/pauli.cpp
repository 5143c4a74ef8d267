#include "fusionnet/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace fnet {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

cplx root_of_unity(int d, long k) {
    const long kk = ((k % d) + d) % d;
    return cplx(std::cos(kTau * kk / d), std::sin(kTau * kk / d));
}

int mod_inv(int a, int p) {
    for (int i = 1; i < p; ++i)
        if ((a * i) % p == 1) return i;
    throw std::logic_error("mod_inv");
}

/// Reduced row echelon form over F_p; returns pivot columns.
std::vector<int> rref_mod_p(std::vector<std::vector<int>>& rows, int p) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const int inv = mod_inv(((rows[r][c] % p) + p) % p, p);
        for (std::size_t cc = 0; cc < ncols; ++cc) rows[r][cc] = (rows[r][cc] * inv % p + p) % p;
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == r) continue;
            const int f = ((rows[rr][c] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t cc = 0; cc < ncols; ++cc)
                rows[rr][cc] = ((rows[rr][cc] - f * rows[r][cc]) % p + p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

/// Nullspace basis over F_p of rows * v = 0.
std::vector<std::vector<int>> nullspace_mod_p(std::vector<std::vector<int>> rows, int p,
                                              std::size_t ncols) {
    const std::vector<int> pivots = rref_mod_p(rows, p);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> basis;
    for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<int> v(ncols, 0);
        v[free_c] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = ((-rows[r][free_c]) % p + p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

// ---------------------------------------------------------------------------
// strings

PauliString string_add(const LegSpace& legs, const PauliString& a, const PauliString& b) {
    PauliString s = PauliString::zero(legs.nlegs());
    for (int l = 0; l < legs.nlegs(); ++l) {
        const int d = legs.dims[static_cast<std::size_t>(l)];
        s.x[static_cast<std::size_t>(l)] =
            (a.x[static_cast<std::size_t>(l)] + b.x[static_cast<std::size_t>(l)]) % d;
        s.z[static_cast<std::size_t>(l)] =
            (a.z[static_cast<std::size_t>(l)] + b.z[static_cast<std::size_t>(l)]) % d;
    }
    return s;
}

PauliString string_neg(const LegSpace& legs, const PauliString& a) {
    PauliString s = PauliString::zero(legs.nlegs());
    for (int l = 0; l < legs.nlegs(); ++l) {
        const int d = legs.dims[static_cast<std::size_t>(l)];
        s.x[static_cast<std::size_t>(l)] = (d - a.x[static_cast<std::size_t>(l)]) % d;
        s.z[static_cast<std::size_t>(l)] = (d - a.z[static_cast<std::size_t>(l)]) % d;
    }
    return s;
}

PauliString string_transpose(const LegSpace& legs, const PauliString& a) {
    PauliString s = a;
    for (int l = 0; l < legs.nlegs(); ++l) {
        const int d = legs.dims[static_cast<std::size_t>(l)];
        s.x[static_cast<std::size_t>(l)] = (d - a.x[static_cast<std::size_t>(l)]) % d;
    }
    return s;
}

PauliString string_embed(const PauliString& a, const std::vector<int>& leg_map, int target_legs) {
    PauliString s = PauliString::zero(target_legs);
    for (std::size_t i = 0; i < leg_map.size(); ++i) {
        s.x[static_cast<std::size_t>(leg_map[i])] = a.x[i];
        s.z[static_cast<std::size_t>(leg_map[i])] = a.z[i];
    }
    return s;
}

// ---------------------------------------------------------------------------
// PhasePerm

PhasePerm PhasePerm::identity(std::size_t n) {
    PhasePerm p;
    p.perm.resize(n);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    p.phase.assign(n, cplx(1, 0));
    return p;
}

PhasePerm PhasePerm::compose(const PhasePerm& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("PhasePerm::compose: dim mismatch");
    PhasePerm out;
    out.perm.resize(dim());
    out.phase.resize(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        const std::size_t mid = other.perm[j];
        out.perm[j] = perm[mid];
        out.phase[j] = phase[mid] * other.phase[j];
    }
    return out;
}

PhasePerm PhasePerm::adjoint() const {
    PhasePerm out;
    out.perm.resize(dim());
    out.phase.resize(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        out.perm[perm[j]] = j;
        out.phase[perm[j]] = std::conj(phase[j]);
    }
    return out;
}

PhasePerm PhasePerm::kron(const PhasePerm& other) const {
    PhasePerm out;
    const std::size_t n2 = other.dim();
    out.perm.resize(dim() * n2);
    out.phase.resize(dim() * n2);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            out.perm[i * n2 + j] = perm[i] * n2 + other.perm[j];
            out.phase[i * n2 + j] = phase[i] * other.phase[j];
        }
    return out;
}

PhasePerm PhasePerm::scaled(cplx s) const {
    PhasePerm out = *this;
    for (auto& p : out.phase) p *= s;
    return out;
}

Cmat PhasePerm::dense() const {
    Cmat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m(perm[j], j) = phase[j];
    return m;
}

double PhasePerm::dist(const PhasePerm& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("PhasePerm::dist: dim mismatch");
    double s = 0;
    for (std::size_t j = 0; j < dim(); ++j) {
        if (perm[j] == other.perm[j])
            s += std::norm(phase[j] - other.phase[j]);
        else
            s += std::norm(phase[j]) + std::norm(other.phase[j]);
    }
    return std::sqrt(s);
}

double PhasePerm::norm() const {
    double s = 0;
    for (const cplx& p : phase) s += std::norm(p);
    return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// realized operators

PhasePerm pauli_phaseperm(const LegSpace& legs, const PauliString& s) {
    PhasePerm out = PhasePerm::identity(1);
    for (int l = 0; l < legs.nlegs(); ++l) {
        const int d = legs.dims[static_cast<std::size_t>(l)];
        PhasePerm leg;
        leg.perm.resize(static_cast<std::size_t>(d));
        leg.phase.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            // X^x Z^z: e_j -> w^(z j) e_{j+x}
            leg.perm[static_cast<std::size_t>(j)] =
                static_cast<std::size_t>((j + s.x[static_cast<std::size_t>(l)]) % d);
            leg.phase[static_cast<std::size_t>(j)] =
                root_of_unity(d, static_cast<long>(s.z[static_cast<std::size_t>(l)]) * j);
        }
        out = out.kron(leg);
    }
    return out;
}

Cmat pauli_operator(const LegSpace& legs, const PauliString& s) {
    return pauli_phaseperm(legs, s).dense();
}

// ---------------------------------------------------------------------------
// PauliGroup

namespace {

std::vector<int> primes_of(const LegSpace& legs) {
    std::set<int> ps(legs.dims.begin(), legs.dims.end());
    return {ps.begin(), ps.end()};
}

std::vector<int> legs_of_prime(const LegSpace& legs, int p) {
    std::vector<int> out;
    for (int l = 0; l < legs.nlegs(); ++l)
        if (legs.dims[static_cast<std::size_t>(l)] == p) out.push_back(l);
    return out;
}

std::vector<int> prime_coords(const PauliString& s, const std::vector<int>& plegs, int p) {
    std::vector<int> v;
    v.reserve(2 * plegs.size());
    for (int l : plegs) {
        v.push_back(((s.x[static_cast<std::size_t>(l)] % p) + p) % p);
        v.push_back(((s.z[static_cast<std::size_t>(l)] % p) + p) % p);
    }
    return v;
}

PauliString string_from_prime_coords(const LegSpace& legs, const std::vector<int>& plegs,
                                     const std::vector<int>& v) {
    PauliString s = PauliString::zero(legs.nlegs());
    for (std::size_t i = 0; i < plegs.size(); ++i) {
        s.x[static_cast<std::size_t>(plegs[i])] = v[2 * i];
        s.z[static_cast<std::size_t>(plegs[i])] = v[2 * i + 1];
    }
    return s;
}

}  // namespace

PauliGroup::PauliGroup(LegSpace legs, std::vector<PauliString> generators)
    : legs_(std::move(legs)), gens_(std::move(generators)) {
    for (const PauliString& g : gens_)
        if (g.nlegs() != legs_.nlegs()) throw std::invalid_argument("PauliGroup: string leg count");
    canonicalize();
}

void PauliGroup::canonicalize() {
    std::vector<PauliString> out;
    for (int p : primes_of(legs_)) {
        const std::vector<int> plegs = legs_of_prime(legs_, p);
        std::vector<std::vector<int>> rows;
        for (const PauliString& g : gens_) {
            std::vector<int> v = prime_coords(g, plegs, p);
            bool nonzero = false;
            for (int e : v) nonzero |= (e != 0);
            if (nonzero) rows.push_back(std::move(v));
        }
        rref_mod_p(rows, p);
        for (const auto& r : rows) out.push_back(string_from_prime_coords(legs_, plegs, r));
    }
    gens_ = std::move(out);
}

std::uint64_t PauliGroup::order() const {
    std::uint64_t o = 1;
    for (const PauliString& g : gens_)
        for (int l = 0; l < legs_.nlegs(); ++l)
            if (g.x[static_cast<std::size_t>(l)] || g.z[static_cast<std::size_t>(l)]) {
                o *= static_cast<std::uint64_t>(legs_.dims[static_cast<std::size_t>(l)]);
                break;
            }
    return o;
}

bool PauliGroup::contains(const PauliString& s) const {
    for (int p : primes_of(legs_)) {
        const std::vector<int> plegs = legs_of_prime(legs_, p);
        std::vector<std::vector<int>> base;
        for (const PauliString& g : gens_) base.push_back(prime_coords(g, plegs, p));
        std::vector<std::vector<int>> with = base;
        with.push_back(prime_coords(s, plegs, p));
        std::vector<std::vector<int>> b2 = base;
        if (rref_mod_p(with, p).size() != rref_mod_p(b2, p).size()) return false;
    }
    return true;
}

bool PauliGroup::subgroup_of(const PauliGroup& other) const {
    for (const PauliString& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

bool PauliGroup::same(const PauliGroup& other) const {
    return subgroup_of(other) && other.subgroup_of(*this);
}

PauliGroup PauliGroup::commutant() const {
    std::vector<PauliString> out;
    for (int p : primes_of(legs_)) {
        const std::vector<int> plegs = legs_of_prime(legs_, p);
        // omega(g, t) = sum_l (x_g z_t − z_g x_t): as a functional of t's
        // (x_t, z_t) coordinates the row is (−z_g, x_g)
        std::vector<std::vector<int>> rows;
        for (const PauliString& g : gens_) {
            std::vector<int> r;
            r.reserve(2 * plegs.size());
            bool nonzero = false;
            for (int l : plegs) {
                const int xg = ((g.x[static_cast<std::size_t>(l)] % p) + p) % p;
                const int zg = ((g.z[static_cast<std::size_t>(l)] % p) + p) % p;
                r.push_back((p - zg) % p);
                r.push_back(xg);
                nonzero |= (xg != 0 || zg != 0);
            }
            if (nonzero) rows.push_back(std::move(r));
        }
        const auto basis = nullspace_mod_p(std::move(rows), p, 2 * plegs.size());
        for (const auto& v : basis) out.push_back(string_from_prime_coords(legs_, plegs, v));
    }
    return PauliGroup(legs_, std::move(out));
}

PauliGroup PauliGroup::join(const PauliGroup& other) const {
    if (!(legs_ == other.legs_)) throw std::invalid_argument("PauliGroup::join: leg mismatch");
    std::vector<PauliString> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return PauliGroup(legs_, std::move(g));
}

PauliGroup PauliGroup::intersect(const PauliGroup& other) const {
    if (!(legs_ == other.legs_)) throw std::invalid_argument("PauliGroup::intersect: leg mismatch");
    std::vector<PauliString> out;
    for (int p : primes_of(legs_)) {
        const std::vector<int> plegs = legs_of_prime(legs_, p);
        std::vector<std::vector<int>> a, b;
        for (const PauliString& g : gens_) {
            auto v = prime_coords(g, plegs, p);
            bool nz = false;
            for (int e : v) nz |= (e != 0);
            if (nz) a.push_back(std::move(v));
        }
        for (const PauliString& g : other.gens_) {
            auto v = prime_coords(g, plegs, p);
            bool nz = false;
            for (int e : v) nz |= (e != 0);
            if (nz) b.push_back(std::move(v));
        }
        // v in span(a) ∩ span(b): kernel of [a^T | −b^T] gives coefficients
        const std::size_t ncols = 2 * plegs.size();
        const std::size_t na = a.size(), nb = b.size();
        if (na == 0 || nb == 0) continue;
        std::vector<std::vector<int>> sys(ncols, std::vector<int>(na + nb, 0));
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t c = 0; c < ncols; ++c) sys[c][i] = a[i][c];
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t c = 0; c < ncols; ++c) sys[c][na + i] = (p - b[i][c]) % p;
        const auto kernel = nullspace_mod_p(std::move(sys), p, na + nb);
        for (const auto& coeff : kernel) {
            std::vector<int> v(ncols, 0);
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t c = 0; c < ncols; ++c) v[c] = (v[c] + coeff[i] * a[i][c]) % p;
            bool nz = false;
            for (int e : v) nz |= (e != 0);
            if (nz) out.push_back(string_from_prime_coords(legs_, plegs, v));
        }
    }
    return PauliGroup(legs_, std::move(out));
}

PauliGroup PauliGroup::center() const { return intersect(commutant()); }

std::vector<PauliString> PauliGroup::enumerate(std::size_t cap) const {
    if (order() > cap) throw std::runtime_error("PauliGroup::enumerate: order exceeds cap");
    std::vector<PauliString> out{PauliString::zero(legs_.nlegs())};
    for (const PauliString& g : gens_) {
        int p = 0;
        for (int l = 0; l < legs_.nlegs(); ++l)
            if (g.x[static_cast<std::size_t>(l)] || g.z[static_cast<std::size_t>(l)]) {
                p = legs_.dims[static_cast<std::size_t>(l)];
                break;
            }
        if (p == 0) continue;
        const std::size_t base = out.size();
        PauliString acc = g;
        for (int k = 1; k < p; ++k) {
            for (std::size_t i = 0; i < base; ++i) out.push_back(string_add(legs_, out[i], acc));
            acc = string_add(legs_, acc, g);
        }
    }
    return out;
}

PauliGroup::SpanBlocks PauliGroup::span_blocks() const {
    SpanBlocks out;
    const std::uint64_t s = order();
    const std::uint64_t z = center().order();
    out.blocks = z;
    const std::uint64_t nn = s / z;
    const std::uint64_t n =
        static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(nn))));
    if (n * n != nn) throw std::runtime_error("PauliGroup::span_blocks: |S|/|Z| not a square");
    out.n = n;
    const std::uint64_t d = legs_.total();
    if (d % (n * z) != 0)
        throw std::runtime_error("PauliGroup::span_blocks: multiplicity not integral");
    out.m = d / (n * z);
    return out;
}

PauliGroup full_pauli_group(const LegSpace& legs) {
    std::vector<PauliString> gens;
    for (int l = 0; l < legs.nlegs(); ++l) {
        PauliString sx = PauliString::zero(legs.nlegs());
        sx.x[static_cast<std::size_t>(l)] = 1;
        PauliString sz = PauliString::zero(legs.nlegs());
        sz.z[static_cast<std::size_t>(l)] = 1;
        gens.push_back(std::move(sx));
        gens.push_back(std::move(sz));
    }
    return PauliGroup(legs, std::move(gens));
}

RepresentedAlgebra pauli_span_algebra(const PauliGroup& g, Tol tol, std::uint64_t seed) {
    const std::size_t d = g.legs().total();
    const std::uint64_t s = g.order();
    if (s * d * d > (std::uint64_t(1) << 26))
        throw std::runtime_error("pauli_span_algebra: too large to materialize");
    std::vector<Cmat> span;
    for (const PauliString& t : g.enumerate(std::size_t(1) << 16))
        span.push_back(pauli_operator(g.legs(), t));
    RepresentedAlgebra a = algebra_from_span(span, static_cast<int>(d), tol, seed);
    std::vector<Cmat> gens;
    for (const PauliString& t : g.generators()) gens.push_back(pauli_operator(g.legs(), t));
    if (!gens.empty()) a.set_generators(std::move(gens));
    return a;
}

Cmat pauli_span_expect(const PauliGroup& g, const Cmat& x) {
    const std::size_t d = g.legs().total();
    if (x.rows != d || x.cols != d) throw std::invalid_argument("pauli_span_expect: dim mismatch");
    Cmat acc = x;
    const PauliGroup w = g.commutant();
    for (const PauliString& u : w.generators()) {
        int ord = 1;
        for (int l = 0; l < g.legs().nlegs(); ++l)
            if (u.x[static_cast<std::size_t>(l)] || u.z[static_cast<std::size_t>(l)])
                ord = std::lcm(ord, g.legs().dims[static_cast<std::size_t>(l)]);
        if (ord == 1) continue;
        const Cmat pu = pauli_operator(g.legs(), u);
        const Cmat pud = dagger(pu);
        Cmat sum = acc;
        Cmat cur = acc;
        for (int k = 1; k < ord; ++k) {
            cur = matmul(pu, matmul(cur, pud));
            sum += cur;
        }
        sum *= cplx(1.0 / ord, 0);
        acc = sum;
    }
    return acc;
}

}  // namespace fnet
