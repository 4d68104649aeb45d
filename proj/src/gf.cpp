// Copyright 2026 The aqc developers
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

#include "aqc/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace aqc {

namespace {

unsigned poly_degree(std::uint32_t p) {
  unsigned d = 0;
  while (p >> (d + 1)) ++d;
  return d;
}

// Remainder of a mod b over F_2[x].
std::uint32_t poly_mod(std::uint64_t a, std::uint32_t b) {
  unsigned db = poly_degree(b);
  for (int i = 63 - static_cast<int>(db); i >= 0; --i) {
    if (a >> (i + db) & 1) a ^= static_cast<std::uint64_t>(b) << i;
  }
  return static_cast<std::uint32_t>(a);
}

bool is_irreducible(std::uint32_t p) {
  unsigned d = poly_degree(p);
  if (d == 1) return true;
  for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f) {
    if (poly_mod(p, f) == 0) return false;
  }
  return true;
}

std::uint32_t smallest_irreducible(unsigned t) {
  for (std::uint32_t p = 1u << t; p < (2u << t); ++p) {
    if (is_irreducible(p)) return p;
  }
  throw InvalidInput("no irreducible polynomial found");  // unreachable
}

}  // namespace

Elem Field::mul_slow(Elem a, Elem b) const {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return poly_mod(acc, irred_);
}

Field::Field(unsigned t) : t_(t) {
  if (t < 1 || t > 16) throw InvalidInput("field exponent t must be in [1,16]");
  q_ = 1u << t;
  irred_ = smallest_irreducible(t);

  // exp/log from the smallest multiplicative generator.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
    log_[1] = 0;
  } else {
    for (Elem g = 2; g < q_; ++g) {
      std::uint32_t ord = 0;
      Elem x = 1;
      do {
        x = mul_slow(x, g);
        ++ord;
      } while (x != 1);
      if (ord == q_ - 1) {
        x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
          exp_[i] = x;
          log_[x] = i;
          x = mul_slow(x, g);
        }
        break;
      }
    }
  }

  trace_.assign(q_, 0);
  for (Elem x = 0; x < q_; ++x) {
    Elem s = x;
    Elem acc = x;
    for (unsigned i = 1; i < t_; ++i) {
      s = mul_slow(s, s);
      acc ^= s;
    }
    if (acc > 1) throw InvalidInput("trace left the prime field");  // unreachable
    trace_[x] = static_cast<std::uint8_t>(acc);
  }
}

std::vector<Elem> Field::subfield_elements(std::uint32_t n) const {
  if (n < 2 || (n & (n - 1)) != 0)
    throw InvalidInput("subfield order must be a power of two >= 2");
  unsigned s = poly_degree(n);
  if (t_ % s != 0)
    throw InvalidInput("no subfield of order " + std::to_string(n) + " in GF(2^" +
                       std::to_string(t_) + "): " + std::to_string(s) +
                       " does not divide " + std::to_string(t_));
  std::vector<Elem> out;
  out.reserve(n);
  for (Elem x = 0; x < q_; ++x) {
    if (pow(x, n) == x) out.push_back(x);
  }
  return out;
}

FieldPtr field_new(unsigned t) {
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(t);
  cache.emplace(t, f);
  return f;
}

namespace {

// Depth-first scan for the lexicographically-smallest self-dual tuple.
// tr(a_i a_j) = delta_ij forces linear independence, so only the trace
// conditions are checked.
bool sdb_dfs(const Field& f, std::vector<Elem>& chosen, Elem from) {
  if (chosen.size() == f.t()) return true;
  for (Elem c = from; c < f.q(); ++c) {
    if (f.trace(c) != 1) continue;  // tr(c^2) = tr(c) must be 1
    bool ok = true;
    for (Elem p : chosen) {
      if (f.trace(f.mul(p, c)) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    if (sdb_dfs(f, chosen, c + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// Smallest g whose Frobenius orbit {g, g^2, g^4, ...} is a basis.
std::vector<Elem> normal_basis_seed(const Field& f) {
  unsigned t = f.t();
  for (Elem g = 1; g < f.q(); ++g) {
    std::vector<Elem> orbit(t);
    orbit[0] = g;
    for (unsigned i = 1; i < t; ++i) orbit[i] = f.mul(orbit[i - 1], orbit[i - 1]);
    // Row-reduce the bit rows to test independence.
    std::vector<std::uint32_t> rows(orbit.begin(), orbit.end());
    unsigned rank = 0;
    for (int bit = static_cast<int>(t) - 1; bit >= 0 && rank < t; --bit) {
      unsigned pivot = rank;
      while (pivot < t && !(rows[pivot] >> bit & 1)) ++pivot;
      if (pivot == t) continue;
      std::swap(rows[rank], rows[pivot]);
      for (unsigned r = 0; r < t; ++r) {
        if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
      }
      ++rank;
    }
    if (rank == t) return orbit;
  }
  throw InvalidInput("no normal element found");  // unreachable
}

// Symmetrize the Gram matrix of the seed basis to the identity. The trace
// form B(x,y) = tr(xy) is symmetric, nondegenerate and non-alternating
// (B(x,x) = tr(x) is not identically zero), so it is congruent to I_t.
std::vector<Elem> gram_symmetrize(const Field& f, std::vector<Elem> pool) {
  std::vector<Elem> ortho;
  while (!pool.empty()) {
    std::size_t hit = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (f.trace(pool[i]) == 1) {
        hit = i;
        break;
      }
    }
    if (hit < pool.size()) {
      Elem e = pool[hit];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(hit));
      for (Elem& w : pool) {
        if (f.trace(f.mul(w, e)) == 1) w ^= e;
      }
      ortho.push_back(e);
      continue;
    }
    // tr vanishes on the whole remaining span: the restricted form is
    // alternating. Fold a hyperbolic pair (u,w) into the last accepted
    // vector e; {e+u, e+w, e+u+w} is orthonormal on span{e,u,w}.
    if (ortho.empty()) throw InvalidInput("trace form degenerate");  // unreachable
    std::size_t ui = pool.size(), wi = pool.size();
    for (std::size_t i = 0; i < pool.size() && ui == pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (f.trace(f.mul(pool[i], pool[j])) == 1) {
          ui = i;
          wi = j;
          break;
        }
      }
    }
    if (ui == pool.size()) throw InvalidInput("trace form degenerate");  // unreachable
    Elem e = ortho.back();
    ortho.pop_back();
    Elem u = pool[ui];
    Elem w = pool[wi];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(wi));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(ui));
    Elem f1 = e ^ u;
    for (Elem& v : pool) {
      if (f.trace(f.mul(v, f1)) == 1) v ^= f1;
    }
    ortho.push_back(f1);
    pool.insert(pool.begin(), {static_cast<Elem>(e ^ w), static_cast<Elem>(e ^ u ^ w)});
  }
  return ortho;
}

}  // namespace

SelfDualBasis self_dual_basis(const FieldPtr& f) {
  std::vector<Elem> elems;
  if (f->t() <= 5) {
    sdb_dfs(*f, elems, 1);
  } else {
    elems = gram_symmetrize(*f, normal_basis_seed(*f));
  }
  if (elems.size() != f->t()) throw InvalidInput("self-dual basis search failed");
  for (unsigned i = 0; i < f->t(); ++i) {
    for (unsigned j = 0; j < f->t(); ++j) {
      if (f->trace(f->mul(elems[i], elems[j])) != (i == j ? 1u : 0u))
        throw InvalidInput("self-dual basis verification failed");
    }
  }
  return SelfDualBasis{f, std::move(elems)};
}

std::vector<std::uint8_t> decomp(const SelfDualBasis& b, Elem x) {
  std::vector<std::uint8_t> s(b.field->t());
  for (unsigned i = 0; i < b.field->t(); ++i) {
    s[i] = static_cast<std::uint8_t>(b.field->trace(b.field->mul(x, b.elems[i])));
  }
  return s;
}

Elem recomp(const SelfDualBasis& b, const std::vector<std::uint8_t>& s) {
  Elem x = 0;
  for (unsigned i = 0; i < b.field->t() && i < s.size(); ++i) {
    if (s[i] & 1) x ^= b.elems[i];
  }
  return x;
}

}  // namespace aqc
