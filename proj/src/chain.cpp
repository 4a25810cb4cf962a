#include "hqg/chain.hpp"

#include "hqg/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hqg {

SparseVec sv_basis(Index i) { return {{i, Rational(1)}}; }

SparseVec sv_from_dense(const std::vector<Rational>& v) {
    SparseVec out;
    for (Index i = 0; i < static_cast<Index>(v.size()); ++i)
        if (!v[static_cast<std::size_t>(i)].is_zero()) out.emplace_back(i, v[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<Rational> sv_to_dense(const SparseVec& v, Index dim) {
    std::vector<Rational> out(static_cast<std::size_t>(dim));
    for (const auto& [i, c] : v) out[static_cast<std::size_t>(i)] = c;
    return out;
}

void sv_normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, std::move(c));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    v = std::move(out);
}

std::string sv_str(const SparseVec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        os << "e" << i;
    }
    return os.str();
}

Factor fac(std::shared_ptr<const LinearMap> m) { return Factor{std::move(m), 0}; }
Factor fac(const LinearMap& m) { return Factor{std::make_shared<LinearMap>(m), 0}; }
Factor id_fac(Index n) { return Factor{nullptr, n}; }

Chain Chain::from_map(const LinearMap& m) {
    Chain c(m.dom_dim());
    c.then_map(m);
    return c;
}

Chain Chain::from_map(std::shared_ptr<const LinearMap> m) {
    Chain c(m->dom_dim());
    c.then_map(std::move(m));
    return c;
}

Chain& Chain::then_kron(std::vector<Factor> factors) {
    KronStage s;
    for (const auto& f : factors) {
        s.dom *= f.dom();
        s.cod *= f.cod();
    }
    s.factors = std::move(factors);
    if (s.dom != cod_)
        throw DimensionError("chain stage domain " + std::to_string(s.dom) + " vs current codomain " +
                             std::to_string(cod_));
    cod_ = s.cod;
    stages_.push_back(std::move(s));
    return *this;
}

Chain& Chain::then_perm(std::vector<Index> dims, std::vector<int> perm) {
    PermStage s;
    s.total = 1;
    for (auto d : dims) s.total *= d;
    if (s.total != cod_)
        throw DimensionError("chain perm domain " + std::to_string(s.total) + " vs current codomain " +
                             std::to_string(cod_));
    if (dims.size() != perm.size()) throw DimensionError("chain perm: dims/perm length mismatch");
    std::vector<bool> seen(dims.size(), false);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= dims.size() || seen[static_cast<std::size_t>(p)])
            throw DimensionError("chain perm: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    s.dims = std::move(dims);
    s.perm = std::move(perm);
    stages_.push_back(std::move(s));
    return *this;
}

Chain& Chain::then_chain(const Chain& other) {
    if (other.dom_ != cod_)
        throw DimensionError("chain concat: domain " + std::to_string(other.dom_) + " vs codomain " +
                             std::to_string(cod_));
    for (const auto& s : other.stages_) stages_.push_back(s);
    cod_ = other.cod_;
    return *this;
}

Chain Chain::flanked(Index left, Index right) const {
    Chain out(left * dom_ * right);
    for (const auto& s : stages_) {
        if (const auto* k = std::get_if<KronStage>(&s)) {
            std::vector<Factor> f;
            if (left != 1) f.push_back(id_fac(left));
            f.insert(f.end(), k->factors.begin(), k->factors.end());
            if (right != 1) f.push_back(id_fac(right));
            out.then_kron(std::move(f));
        } else {
            const auto& p = std::get<PermStage>(s);
            std::vector<Index> dims;
            std::vector<int> perm;
            int shift = 0;
            if (left != 1) {
                dims.push_back(left);
                perm.push_back(0);
                shift = 1;
            }
            for (auto d : p.dims) dims.push_back(d);
            for (auto q : p.perm) perm.push_back(q + shift);
            if (right != 1) {
                dims.push_back(right);
                perm.push_back(static_cast<int>(dims.size()) - 1);
            }
            out.then_perm(std::move(dims), std::move(perm));
        }
    }
    return out;
}

namespace {

// Appends the expansion of one input basis vector through a Kronecker
// stage: walk the factors left to right, extending (partial index,
// coefficient) pairs with each factor's column.
void expand_kron(const std::vector<Factor>& factors, const std::vector<Index>& legs, const Rational& coef,
                 std::map<Index, Rational>& acc) {
    struct Part {
        Index idx;
        Rational c;
    };
    std::vector<Part> cur{{0, coef}};
    std::vector<Part> next;
    for (std::size_t l = 0; l < factors.size(); ++l) {
        const auto& f = factors[l];
        const Index x = legs[l];
        next.clear();
        if (!f.map) {
            for (auto& p : cur) next.push_back({p.idx * f.ident + x, std::move(p.c)});
        } else {
            const auto& m = *f.map;
            for (Index r = 0; r < m.cod_dim(); ++r) {
                const Rational& e = m.at(r, x);
                if (e.is_zero()) continue;
                for (const auto& p : cur) next.push_back({p.idx * m.cod_dim() + r, p.c * e});
            }
        }
        std::swap(cur, next);
        if (cur.empty()) return;
    }
    for (auto& p : cur) {
        auto it = acc.find(p.idx);
        if (it == acc.end())
            acc.emplace(p.idx, std::move(p.c));
        else
            it->second += p.c;
    }
}

} // namespace

SparseVec Chain::apply_stage(const Stage& s, const SparseVec& v) {
    if (const auto* k = std::get_if<KronStage>(&s)) {
        std::map<Index, Rational> acc;
        std::vector<Index> legs(k->factors.size());
        for (const auto& [idx, coef] : v) {
            Index rem = idx;
            for (std::size_t l = k->factors.size(); l-- > 0;) {
                const Index d = k->factors[l].dom();
                legs[l] = rem % d;
                rem /= d;
            }
            expand_kron(k->factors, legs, coef, acc);
        }
        SparseVec out;
        out.reserve(acc.size());
        for (auto& [i, c] : acc)
            if (!c.is_zero()) out.emplace_back(i, std::move(c));
        return out;
    }
    const auto& p = std::get<PermStage>(s);
    const auto nlegs = p.dims.size();
    std::vector<Index> strides_out(nlegs, 1);
    {
        Index st = 1;
        for (std::size_t q = nlegs; q-- > 0;) {
            strides_out[q] = st;
            st *= p.dims[static_cast<std::size_t>(p.perm[q])];
        }
    }
    SparseVec out;
    out.reserve(v.size());
    std::vector<Index> legs(nlegs);
    for (const auto& [idx, coef] : v) {
        Index rem = idx;
        for (std::size_t l = nlegs; l-- > 0;) {
            legs[l] = rem % p.dims[l];
            rem /= p.dims[l];
        }
        Index o = 0;
        for (std::size_t q = 0; q < nlegs; ++q) o += legs[static_cast<std::size_t>(p.perm[q])] * strides_out[q];
        out.emplace_back(o, coef);
    }
    sv_normalize(out);
    return out;
}

SparseVec Chain::apply(const SparseVec& v) const {
    SparseVec cur = v;
    for (const auto& s : stages_) {
        cur = apply_stage(s, cur);
        if (cur.empty()) break;
    }
    return cur;
}

LinearMap Chain::to_matrix() const {
    LinearMap out(cod_, dom_);
    for (Index j = 0; j < dom_; ++j)
        for (const auto& [i, c] : apply_basis(j)) out.at(i, j) = c;
    return out;
}

std::optional<ChainDiff> chains_differ(const Chain& a, const Chain& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod())
        throw DimensionError("chain comparison: shape mismatch");
    for (Index j = 0; j < a.dom(); ++j) {
        SparseVec va = a.apply_basis(j);
        SparseVec vb = b.apply_basis(j);
        if (va != vb) return ChainDiff{j, std::move(va), std::move(vb)};
    }
    return std::nullopt;
}

} // namespace hqg
