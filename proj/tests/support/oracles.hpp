#ifndef SKEWIND_TESTS_ORACLES_HPP_
#define SKEWIND_TESTS_ORACLES_HPP_

// Brute-force reference computations. They use plain nested vectors and
// loops only, never the library's search or checking code, so that
// agreement with the library means something.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

  using Table = std::vector<std::vector<int>>;

  inline bool associative(Table const& t) {
    std::size_t const n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool idempotent(Table const& t) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (t[a][a] != static_cast<int>(a)) {
        return false;
      }
    }
    return true;
  }

  // Every table of order n, idempotent and associative: a full scan of
  // all n^(n*n) tables.
  inline std::vector<Table> all_bands(std::size_t n) {
    std::size_t const cells = n * n;
    std::vector<int>  digits(cells, 0);
    std::vector<Table> out;
    while (true) {
      Table t(n, std::vector<int>(n));
      for (std::size_t i = 0; i < cells; ++i) {
        t[i / n][i % n] = digits[i];
      }
      if (idempotent(t) && associative(t)) {
        out.push_back(t);
      }
      std::size_t i = 0;
      while (i < cells && ++digits[i] == static_cast<int>(n)) {
        digits[i++] = 0;
      }
      if (i == cells) {
        break;
      }
    }
    return out;
  }

  // t relabelled by p: the result r has r[p[a]][p[b]] = p[t[a][b]].
  inline Table relabel(Table const& t, std::vector<int> const& p) {
    Table r(t.size(), std::vector<int>(t.size()));
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        r[p[a]][p[b]] = p[t[a][b]];
      }
    }
    return r;
  }

  // True iff some permutation carries every table of x onto the matching
  // table of y.
  inline bool isomorphic(std::vector<Table> const& x, std::vector<Table> const& y) {
    std::size_t const n = x.front().size();
    std::vector<int>  p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t k = 0; k < x.size() && ok; ++k) {
        ok = relabel(x[k], p) == y[k];
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Representatives of the isomorphism classes, by pairwise comparison.
  inline std::vector<std::vector<Table>> classes(
      std::vector<std::vector<Table>> const& items) {
    std::vector<std::vector<Table>> reps;
    for (auto const& item : items) {
      bool fresh = true;
      for (auto const& r : reps) {
        if (isomorphic(item, r)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(item);
      }
    }
    return reps;
  }

  inline bool absorptive(Table const& m, Table const& j) {
    std::size_t const n = m.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        int const x = static_cast<int>(a);
        int const y = static_cast<int>(b);
        if (j[x][m[x][y]] != x || j[m[x][y]][y] != y || m[x][j[x][y]] != x
            || m[j[x][y]][y] != y) {
          return false;
        }
      }
    }
    return true;
  }

  // Skew lattices of order n up to isomorphism.
  inline std::vector<std::vector<Table>> skew_lattice_classes(std::size_t n) {
    auto const                      bands = all_bands(n);
    std::vector<std::vector<Table>> pairs;
    for (auto const& m : bands) {
      for (auto const& j : bands) {
        if (absorptive(m, j)) {
          pairs.push_back({m, j});
        }
      }
    }
    return classes(pairs);
  }

  inline std::vector<std::vector<Table>> band_classes(std::size_t n) {
    std::vector<std::vector<Table>> items;
    for (auto const& t : all_bands(n)) {
      items.push_back({t});
    }
    return classes(items);
  }

  // Permutations p with p[t[a][b]] = t[p[a]][p[b]] for every table t.
  inline std::vector<std::vector<int>> automorphisms(std::vector<Table> const& ts) {
    std::size_t const             n = ts.front().size();
    std::vector<int>              p(n);
    std::vector<std::vector<int>> out;
    std::iota(p.begin(), p.end(), 0);
    do {
      bool fixed = true;
      for (std::size_t k = 0; k < ts.size() && fixed; ++k) {
        fixed = relabel(ts[k], p) == ts[k];
      }
      if (fixed) {
        out.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // Number of actions of the group g on the skew lattice (m, j), counted up
  // to Aut(g) x Aut(m, j). Every map from g to the permutations of the
  // carrier is tried; act[a][u] is a^u.
  inline std::size_t action_classes(Table const& g, Table const& m, Table const& j) {
    std::size_t const gn = g.size();
    std::size_t const n  = m.size();
    int               e  = 0;
    while (g[e][0] != 0) {
      ++e;
    }
    std::vector<std::vector<int>> perms;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool hom = true;
      for (std::size_t a = 0; a < n && hom; ++a) {
        for (std::size_t b = 0; b < n && hom; ++b) {
          hom = p[m[a][b]] == m[p[a]][p[b]] && p[j[a][b]] == j[p[a]][p[b]];
        }
      }
      if (hom) {
        perms.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));

    auto const gaut = automorphisms({g});
    auto const baut = automorphisms({m, j});

    std::vector<Table> keys;
    std::vector<std::size_t> choice(gn, 0);
    while (true) {
      Table act(n, std::vector<int>(gn));
      for (std::size_t u = 0; u < gn; ++u) {
        for (std::size_t a = 0; a < n; ++a) {
          act[a][u] = perms[choice[u]][a];
        }
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = act[a][e] == static_cast<int>(a);
        for (std::size_t u = 0; u < gn && ok; ++u) {
          for (std::size_t v = 0; v < gn && ok; ++v) {
            ok = act[act[a][u]][v] == act[a][g[u][v]];
          }
        }
      }
      if (ok) {
        Table best;
        for (auto const& f : gaut) {
          for (auto const& q : baut) {
            Table t(n, std::vector<int>(gn));
            for (std::size_t a = 0; a < n; ++a) {
              for (std::size_t u = 0; u < gn; ++u) {
                t[q[a]][f[u]] = q[act[a][u]];
              }
            }
            if (best.empty() || t < best) {
              best = t;
            }
          }
        }
        if (std::find(keys.begin(), keys.end(), best) == keys.end()) {
          keys.push_back(best);
        }
      }
      std::size_t k = 0;
      while (k < gn && ++choice[k] == perms.size()) {
        choice[k++] = 0;
      }
      if (k == gn) {
        break;
      }
    }
    return keys.size();
  }

  inline std::vector<int> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

}  // namespace oracle

#endif  // SKEWIND_TESTS_ORACLES_HPP_
