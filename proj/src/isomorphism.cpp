#include "skewind/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "skewind/error.hpp"

namespace skewind {

  Structure to_structure(OperationTable const& t) {
    return Structure{t.order(), {t.to_partial()}, {}};
  }

  Structure to_structure(SkewLatticeTable const& s) {
    return Structure{s.order(), {s.meet.to_partial(), s.join.to_partial()}, {}};
  }

  Isomorphism Isomorphism::identity(std::size_t n) {
    Isomorphism iso{n, n, std::vector<Index>(n)};
    std::iota(iso.map.begin(), iso.map.end(), 0);
    return iso;
  }

  Isomorphism Isomorphism::inverse() const {
    Isomorphism out{target_order, source_order, std::vector<Index>(map.size())};
    for (std::size_t x = 0; x < map.size(); ++x) {
      out.map[static_cast<std::size_t>(map[x])] = static_cast<Index>(x);
    }
    return out;
  }

  Isomorphism Isomorphism::then(Isomorphism const& next) const {
    Isomorphism out{source_order, next.target_order, map};
    for (auto& x : out.map) {
      x = next(x);
    }
    return out;
  }

  bool Isomorphism::is_identity() const noexcept {
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (map[x] != static_cast<Index>(x)) {
        return false;
      }
    }
    return true;
  }

  namespace {
    void check_signature(Structure const& a, Structure const& b) {
      if (a.binary.size() != b.binary.size()
          || a.unary.size() != b.unary.size()) {
        throw Error(ErrorCode::signature_mismatch,
                    "structures have different signatures");
      }
    }

    Index image(Isomorphism const& iso, Index x) {
      return x == undefined ? undefined : iso(x);
    }

    // Isomorphism invariants of each element; only equal signatures may be
    // matched.
    std::vector<std::vector<int>> signatures(Structure const& s) {
      auto const                    n = s.order;
      std::vector<std::vector<int>> sig(n);
      for (auto const& op : s.binary) {
        for (std::size_t x = 0; x < n; ++x) {
          int                 row_def = 0, col_def = 0, left_id = 0,
              right_id = 0;
          std::vector<bool>   row_img(n, false), col_img(n, false);
          auto const          xi = static_cast<Index>(x);
          for (std::size_t z = 0; z < n; ++z) {
            Index const xz = op(x, z);
            Index const zx = op(z, x);
            if (xz != undefined) {
              ++row_def;
              row_img[static_cast<std::size_t>(xz)] = true;
              right_id += xz == xi;
            }
            if (zx != undefined) {
              ++col_def;
              col_img[static_cast<std::size_t>(zx)] = true;
              left_id += zx == xi;
            }
          }
          Index const xx = op(x, x);
          sig[x].push_back(xx == xi ? 1 : (xx == undefined ? 2 : 0));
          sig[x].push_back(row_def);
          sig[x].push_back(col_def);
          sig[x].push_back(
              static_cast<int>(std::count(row_img.begin(), row_img.end(), true)));
          sig[x].push_back(
              static_cast<int>(std::count(col_img.begin(), col_img.end(), true)));
          sig[x].push_back(left_id);
          sig[x].push_back(right_id);
        }
      }
      for (auto const& u : s.unary) {
        for (std::size_t x = 0; x < n; ++x) {
          // length of the forward orbit of x
          std::vector<bool> seen(n, false);
          int               len = 0;
          for (Index y = static_cast<Index>(x);
               y != undefined && !seen[static_cast<std::size_t>(y)];
               y = u[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            ++len;
          }
          sig[x].push_back(len);
        }
      }
      return sig;
    }

    class Search {
     public:
      Search(Structure const& a, Structure const& b)
          : _a(a),
            _b(b),
            _n(a.order),
            _sig_a(signatures(a)),
            _sig_b(signatures(b)),
            _fwd(_n, undefined),
            _bwd(_n, undefined) {}

      bool signatures_compatible() const {
        auto sa = _sig_a;
        auto sb = _sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa == sb;
      }

      // Returns false when visit asked to stop.
      bool run(std::size_t                                     depth,
               std::function<bool(Isomorphism const&)> const& visit) {
        while (depth < _n && _fwd[depth] != undefined) {
          ++depth;
        }
        if (depth == _n) {
          Isomorphism iso{_n, _n, _fwd};
          if (!verify_isomorphism(_a, _b, iso)) {
            throw std::logic_error(
                "propagated map failed isomorphism certification");
          }
          return visit(iso);
        }
        for (std::size_t y = 0; y < _n; ++y) {
          if (_bwd[y] != undefined || _sig_a[depth] != _sig_b[y]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(static_cast<Index>(depth), static_cast<Index>(y))) {
            if (!run(depth + 1, visit)) {
              return false;
            }
          }
          undo(mark);
        }
        return true;
      }

     private:
      bool assign(Index x, Index y) {
        std::vector<std::pair<Index, Index>> queue{{x, y}};
        while (!queue.empty()) {
          auto [p, q] = queue.back();
          queue.pop_back();
          auto const pu = static_cast<std::size_t>(p);
          auto const qu = static_cast<std::size_t>(q);
          if (_fwd[pu] != undefined) {
            if (_fwd[pu] != q) {
              return false;
            }
            continue;
          }
          if (_bwd[qu] != undefined || _sig_a[pu] != _sig_b[qu]) {
            return false;
          }
          _fwd[pu] = q;
          _bwd[qu] = p;
          _trail.push_back(p);
          for (std::size_t k = 0; k < _a.binary.size(); ++k) {
            auto const& opa = _a.binary[k];
            auto const& opb = _b.binary[k];
            for (Index z : _trail) {
              auto const zu = static_cast<std::size_t>(z);
              auto const zq = static_cast<std::size_t>(_fwd[zu]);
              Index      l  = opa(pu, zu);
              Index      r  = opb(qu, zq);
              if ((l == undefined) != (r == undefined)) {
                return false;
              }
              if (l != undefined) {
                queue.emplace_back(l, r);
              }
              l = opa(zu, pu);
              r = opb(zq, qu);
              if ((l == undefined) != (r == undefined)) {
                return false;
              }
              if (l != undefined) {
                queue.emplace_back(l, r);
              }
            }
          }
          for (std::size_t k = 0; k < _a.unary.size(); ++k) {
            Index const l = _a.unary[k][pu];
            Index const r = _b.unary[k][qu];
            if ((l == undefined) != (r == undefined)) {
              return false;
            }
            if (l != undefined) {
              queue.emplace_back(l, r);
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto const p = static_cast<std::size_t>(_trail.back());
          _trail.pop_back();
          _bwd[static_cast<std::size_t>(_fwd[p])] = undefined;
          _fwd[p]                                 = undefined;
        }
      }

      Structure const&              _a;
      Structure const&              _b;
      std::size_t                   _n;
      std::vector<std::vector<int>> _sig_a;
      std::vector<std::vector<int>> _sig_b;
      std::vector<Index>            _fwd;
      std::vector<Index>            _bwd;
      std::vector<Index>            _trail;
    };
  }  // namespace

  bool verify_isomorphism(Structure const&   a,
                          Structure const&   b,
                          Isomorphism const& iso) {
    if (a.binary.size() != b.binary.size() || a.unary.size() != b.unary.size()
        || a.order != b.order || iso.map.size() != a.order) {
      return false;
    }
    std::vector<bool> hit(a.order, false);
    for (Index y : iso.map) {
      if (y < 0 || static_cast<std::size_t>(y) >= a.order
          || hit[static_cast<std::size_t>(y)]) {
        return false;
      }
      hit[static_cast<std::size_t>(y)] = true;
    }
    for (std::size_t k = 0; k < a.binary.size(); ++k) {
      for (std::size_t x = 0; x < a.order; ++x) {
        for (std::size_t z = 0; z < a.order; ++z) {
          if (image(iso, a.binary[k](x, z))
              != b.binary[k](static_cast<std::size_t>(iso.map[x]),
                             static_cast<std::size_t>(iso.map[z]))) {
            return false;
          }
        }
      }
    }
    for (std::size_t k = 0; k < a.unary.size(); ++k) {
      for (std::size_t x = 0; x < a.order; ++x) {
        if (image(iso, a.unary[k][x])
            != b.unary[k][static_cast<std::size_t>(iso.map[x])]) {
          return false;
        }
      }
    }
    return true;
  }

  void for_each_isomorphism(Structure const&                        a,
                            Structure const&                        b,
                            std::function<bool(Isomorphism const&)> visit) {
    check_signature(a, b);
    if (a.order != b.order) {
      return;
    }
    Search search(a, b);
    if (!search.signatures_compatible()) {
      return;
    }
    search.run(0, visit);
  }

  std::optional<Isomorphism> find_isomorphism(Structure const& a,
                                              Structure const& b) {
    std::optional<Isomorphism> found;
    for_each_isomorphism(a, b, [&found](Isomorphism const& iso) {
      found = iso;
      return false;
    });
    return found;
  }

  std::optional<Isomorphism> find_isomorphism(OperationTable const& a,
                                              OperationTable const& b) {
    return find_isomorphism(to_structure(a), to_structure(b));
  }

  std::optional<Isomorphism> find_isomorphism(SkewLatticeTable const& a,
                                              SkewLatticeTable const& b) {
    return find_isomorphism(to_structure(a), to_structure(b));
  }

  std::vector<Isomorphism> automorphisms(Structure const& s) {
    std::vector<Isomorphism> out;
    for_each_isomorphism(s, s, [&out](Isomorphism const& iso) {
      out.push_back(iso);
      return true;
    });
    return out;
  }

  namespace {
    template <typename T>
    T canonical(T const& t, std::size_t n) {
      if (n > canonical_form_limit) {
        throw Error(ErrorCode::bound_exceeded,
                    "canonical form needs order <= "
                        + std::to_string(canonical_form_limit));
      }
      std::vector<Index> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      T best = t;
      do {
        T candidate = t.relabel(perm);
        if (candidate < best) {
          best = std::move(candidate);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }
  }  // namespace

  OperationTable canonical_form(OperationTable const& t) {
    return canonical(t, t.order());
  }

  SkewLatticeTable canonical_form(SkewLatticeTable const& s) {
    return canonical(s, s.order());
  }

}  // namespace skewind
