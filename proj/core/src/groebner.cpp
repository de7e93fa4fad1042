// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfgpoly/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <tuple>

#include "cfgpoly/error.hpp"

namespace cfgpoly {

namespace {

constexpr std::size_t kMaxVars = 16;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

struct Term {
  Mono m;
  Rat c;
};

// Terms in strictly decreasing order.
using GPoly = std::vector<Term>;

struct Ctx {
  std::size_t n = 0;
  MonomialOrder order = MonomialOrder::kGrevlex;

  int cmp(const Mono& a, const Mono& b) const {
    if (order == MonomialOrder::kEliminateFirst && a.e[0] != b.e[0]) {
      return a.e[0] > b.e[0] ? 1 : -1;
    }
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

bool divides(const Mono& a, const Mono& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

Mono mul(const Mono& a, const Mono& b) {
  Mono m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}

// b / a, assuming a | b.
Mono quot(const Mono& b, const Mono& a) {
  Mono m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  m.deg = b.deg - a.deg;
  return m;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

GPoly to_gpoly(const Ctx& ctx, const Poly& p) {
  GPoly out;
  out.reserve(p.num_terms());
  for (const auto& [e, c] : p.terms()) {
    Term t;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > UINT16_MAX) throw Error(Errc::kUnsupportedShape, "groebner: exponent too large");
      t.m.e[i] = static_cast<std::uint16_t>(e[i]);
      t.m.deg += e[i];
    }
    t.c = c;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ctx.cmp(a.m, b.m) > 0; });
  return out;
}

Poly to_poly(const Ctx& ctx, const GPoly& g, const VarSet& vars) {
  Poly p(vars);
  Exponents e(ctx.n);
  for (const auto& t : g) {
    for (std::size_t i = 0; i < ctx.n; ++i) e[i] = t.m.e[i];
    p.add_term(e, t.c);
  }
  return p;
}

void make_monic(GPoly& g) {
  if (g.empty() || g.front().c == 1) return;
  const Rat inv = 1 / g.front().c;
  for (auto& t : g) t.c *= inv;
}

// f[from..] - c * m * g, merged in decreasing order.
GPoly sub_mul(const Ctx& ctx, const GPoly& f, std::size_t from, const Rat& c, const Mono& m,
              const GPoly& g) {
  GPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from;
  std::size_t j = 0;
  Term scaled;
  while (i < f.size() || j < g.size()) {
    if (j < g.size()) {
      scaled.m = mul(m, g[j].m);
    }
    const int s = i == f.size() ? -1 : j == g.size() ? 1 : ctx.cmp(f[i].m, scaled.m);
    if (s > 0) {
      out.push_back(f[i++]);
    } else if (s < 0) {
      scaled.c = -c * g[j].c;
      out.push_back(scaled);
      ++j;
    } else {
      Rat v = f[i].c - c * g[j].c;
      if (sgn(v) != 0) out.push_back(Term{f[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by the polynomials in `basis` (monic or not).
GPoly normal_form(const Ctx& ctx, GPoly f, const std::vector<const GPoly*>& basis) {
  GPoly rem;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lt = f[pos];
    const GPoly* div = nullptr;
    for (const GPoly* g : basis) {
      if (divides(g->front().m, lt.m)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Rat c = lt.c / div->front().c;
    f = sub_mul(ctx, f, pos, c, quot(lt.m, div->front().m), *div);
    pos = 0;
  }
  return rem;
}

GPoly s_poly(const Ctx& ctx, const GPoly& a, const GPoly& b) {
  const Mono l = lcm(a.front().m, b.front().m);
  GPoly left;
  left.reserve(a.size());
  const Mono ma = quot(l, a.front().m);
  const Rat ca = 1 / a.front().c;
  for (const auto& t : a) left.push_back(Term{mul(ma, t.m), t.c * ca});
  return sub_mul(ctx, left, 0, 1 / b.front().c, quot(l, b.front().m), b);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Mono lcm;
};

class Buchberger {
 public:
  Buchberger(Ctx ctx, std::size_t budget, GroebnerStats* stats)
      : ctx_(ctx), budget_(budget), stats_(stats) {}

  void add_generator(GPoly g) {
    g = normal_form(ctx_, std::move(g), active_basis());
    if (g.empty()) return;
    make_monic(g);
    update(std::move(g));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (before(pairs_[k], pairs_[best])) best = k;
      }
      const Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++reduced_ > budget_) {
        throw Error(Errc::kBudgetExceeded, "groebner: S-pair budget of " +
                                               std::to_string(budget_) + " exhausted");
      }
      GPoly h = normal_form(ctx_, s_poly(ctx_, polys_[p.i], polys_[p.j]), active_basis());
      if (stats_ != nullptr) ++stats_->pairs_reduced;
      if (h.empty()) {
        if (stats_ != nullptr) ++stats_->zero_reductions;
        continue;
      }
      make_monic(h);
      update(std::move(h));
    }
  }

  std::vector<GPoly> reduced_basis() const {
    std::vector<GPoly> g;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) g.push_back(polys_[k]);
    }
    std::vector<GPoly> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const GPoly*> others;
      for (std::size_t l = 0; l < g.size(); ++l) {
        if (l != k) others.push_back(&g[l]);
      }
      GPoly r = normal_form(ctx_, g[k], others);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) {
      return ctx_.cmp(a.front().m, b.front().m) < 0;
    });
    return out;
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    const int c = ctx_.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  std::vector<const GPoly*> active_basis() const {
    std::vector<const GPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(GPoly h) {
    const std::size_t t = polys_.size();
    const Mono lh = h.front().m;
    polys_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<Pair> c;
    for (std::size_t k = 0; k < t; ++k) {
      if (active_[k]) c.push_back(Pair{k, t, lcm(polys_[k].front().m, lh)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = coprime(polys_[p.i].front().m, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (divides(c[b].lcm, p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (divides(d[b].lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const Mono& l = p.lcm;
      if (!divides(lh, l) || lcm(polys_[p.i].front().m, lh) == l ||
          lcm(polys_[p.j].front().m, lh) == l) {
        next.push_back(p);
      }
    }
    for (const Pair& p : d) {
      if (!coprime(polys_[p.i].front().m, lh)) next.push_back(p);
    }
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < t; ++k) {
      if (active_[k] && divides(lh, polys_[k].front().m)) active_[k] = false;
    }
    active_[t] = true;
  }

  Ctx ctx_;
  std::size_t budget_;
  GroebnerStats* stats_;
  std::size_t reduced_ = 0;
  std::vector<GPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

Ctx context_for(const VarSet& vars, MonomialOrder order) {
  if (vars.size() > kMaxVars) {
    throw Error(Errc::kUnsupportedShape, "groebner: at most 16 variables are supported");
  }
  return Ctx{vars.size(), order};
}

const VarSet& common_vars(const std::vector<Poly>& polys) {
  static const VarSet kEmpty;
  if (polys.empty()) return kEmpty;
  for (const auto& p : polys) {
    if (!(p.vars() == polys.front().vars())) {
      throw Error(Errc::kVarSetMismatch, "groebner: generators use different VarSets");
    }
  }
  return polys.front().vars();
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opts,
                                 GroebnerStats* stats) {
  const VarSet& vars = common_vars(gens);
  const Ctx ctx = context_for(vars, opts.order);
  Buchberger bb(ctx, opts.pair_budget, stats);
  for (const auto& g : gens) bb.add_generator(to_gpoly(ctx, g));
  bb.run();
  std::vector<Poly> out;
  for (const auto& g : bb.reduced_basis()) out.push_back(to_poly(ctx, g, vars));
  return out;
}

Poly reduce(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order) {
  const Ctx ctx = context_for(f.vars(), order);
  std::vector<GPoly> gs;
  for (const auto& b : basis) {
    if (!(b.vars() == f.vars())) throw Error(Errc::kVarSetMismatch, "reduce: VarSets differ");
    if (!b.is_zero()) gs.push_back(to_gpoly(ctx, b));
  }
  std::vector<const GPoly*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  return to_poly(ctx, normal_form(ctx, to_gpoly(ctx, f), ptrs), f.vars());
}

bool verify_groebner(const std::vector<Poly>& basis, MonomialOrder order) {
  const VarSet& vars = common_vars(basis);
  const Ctx ctx = context_for(vars, order);
  std::vector<GPoly> gs;
  for (const auto& b : basis) {
    if (!b.is_zero()) gs.push_back(to_gpoly(ctx, b));
  }
  std::vector<const GPoly*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (!normal_form(ctx, s_poly(ctx, gs[i], gs[j]), ptrs).empty()) return false;
    }
  }
  return true;
}

Exponents leading_monomial(const Poly& p, MonomialOrder order) {
  if (p.is_zero()) throw Error(Errc::kInvalidInput, "leading_monomial of zero");
  const Ctx ctx = context_for(p.vars(), order);
  const GPoly g = to_gpoly(ctx, p);
  Exponents e(ctx.n);
  for (std::size_t i = 0; i < ctx.n; ++i) e[i] = g.front().m.e[i];
  return e;
}

}  // namespace cfgpoly
