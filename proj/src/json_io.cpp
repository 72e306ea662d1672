#include "skewind/json_io.hpp"

#include <initializer_list>

#include "skewind/error.hpp"

namespace skewind::json_io {

  namespace {

    [[noreturn]] void malformed(std::string const& what) {
      throw Error(ErrorCode::malformed_input, what);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        malformed(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    // The first of j, j[k1], j[k2][..] that has the marker key.
    json const& block(json const&                               j,
                      char const*                               marker,
                      std::initializer_list<std::initializer_list<char const*>> paths,
                      char const*                               what) {
      if (j.is_object() && j.contains(marker)) {
        return j;
      }
      for (auto const& path : paths) {
        json const* at = &j;
        bool        ok = true;
        for (char const* key : path) {
          if (!at->is_object() || !at->contains(key)) {
            ok = false;
            break;
          }
          at = &at->at(key);
        }
        if (ok && at->is_object() && at->contains(marker)) {
          return *at;
        }
      }
      malformed(std::string("no ") + what + " found");
    }

    Index index(json const& j) {
      if (!j.is_number_integer()) {
        malformed("expected an integer, got " + j.dump());
      }
      auto const v = j.get<long long>();
      if (v < undefined || v > 1'000'000) {
        malformed("index out of range: " + j.dump());
      }
      return static_cast<Index>(v);
    }

    std::size_t count(json const& j) {
      Index const v = index(j);
      if (v < 0) {
        malformed("count must be non-negative");
      }
      return static_cast<std::size_t>(v);
    }

    std::vector<Index> vec(json const& j) {
      if (!j.is_array()) {
        malformed("expected an array, got " + j.dump().substr(0, 40));
      }
      std::vector<Index> out;
      for (auto const& x : j) {
        out.push_back(index(x));
      }
      return out;
    }

    std::vector<std::vector<Index>> rows(json const& j) {
      if (!j.is_array()) {
        malformed("expected a table");
      }
      std::vector<std::vector<Index>> out;
      for (auto const& r : j) {
        out.push_back(vec(r));
      }
      return out;
    }

    OperationTable total(json const& j, std::size_t n, char const* name) {
      auto const r = rows(j);
      if (r.size() != n) {
        malformed(std::string(name) + " must have " + std::to_string(n) + " rows");
      }
      return OperationTable(r);
    }

    PartialTable partial(json const& j,
                         std::size_t rows_n,
                         std::size_t cols_n,
                         char const* name) {
      auto const r = rows(j);
      if (r.size() != rows_n) {
        malformed(std::string(name) + " must have " + std::to_string(rows_n)
                  + " rows");
      }
      for (auto const& row : r) {
        if (row.size() != cols_n) {
          malformed(std::string(name) + " rows must have "
                    + std::to_string(cols_n) + " entries");
        }
      }
      if (rows_n == 0) {
        return PartialTable(0, cols_n);
      }
      return PartialTable(r);
    }

    template <typename F>
    auto guarded(F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        malformed(e.what());
      }
    }

  }  // namespace

  json parse(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      malformed(std::string("invalid JSON: ") + e.what());
    }
  }

  json to_json(SkewLatticeTable const& s) {
    return {{"order", s.order()},
            {"ops", {{"meet", s.meet.to_rows()}, {"join", s.join.to_rows()}}}};
  }

  json to_json(GroupTable const& g) {
    return {{"order", g.order()}, {"ops", {{"mul", g.table().to_rows()}}}};
  }

  json to_json(FiniteGroupoid const& g) {
    json morphisms = json::array();
    for (auto const& m : g.morphisms()) {
      morphisms.push_back({{"dom", m.dom}, {"cod", m.cod}});
    }
    return {{"objects", g.object_count()},
            {"morphisms", std::move(morphisms)},
            {"comp", g.comp_table().to_rows()},
            {"inv", g.inv_table()},
            {"identity", g.identities()}};
  }

  json to_json(RestrictionSystem const& s) {
    return {{"groupoid", to_json(s.groupoid)},
            {"objects", to_json(s.objects)},
            {"restL", s.restrict_left.to_rows()},
            {"restR", s.restrict_right.to_rows()},
            {"extL", s.extend_left.to_rows()},
            {"extR", s.extend_right.to_rows()}};
  }

  json to_json(BiBandAlgebra const& s) {
    return {{"order", s.order()},
            {"join", s.join.to_rows()},
            {"meet", s.meet.to_rows()},
            {"star", s.star}};
  }

  json to_json(GroupAction const& a) {
    return {{"group", to_json(a.group)},
            {"lattice", to_json(a.lattice)},
            {"act", a.act}};
  }

  namespace {
    json flag_json(Flag const& f) {
      json out{{"name", f.name}, {"pass", f.pass}, {"roles", f.roles}};
      out["witness"] = f.pass ? json(nullptr) : json(f.witness);
      if (!f.note.empty()) {
        out["note"] = f.note;
      }
      return out;
    }
  }  // namespace

  json to_json(AxiomReport const& r) {
    json flags = json::array();
    for (auto const& f : r.flags()) {
      flags.push_back(flag_json(f));
    }
    json obs = json::array();
    for (auto const& f : r.observations()) {
      obs.push_back(flag_json(f));
    }
    return {{"title", r.title()},
            {"pass", r.pass()},
            {"flags", std::move(flags)},
            {"observations", std::move(obs)}};
  }

  json to_json(ModelInstance const& m) {
    return {{"name", m.name},
            {"group_name", m.group_name},
            {"action", to_json(m.action)},
            {"algebra", to_json(m.algebra.algebra)},
            {"system", to_json(m.groupoid.system)}};
  }

  json to_json(Isomorphism const& m) {
    return m.map;
  }

  SkewLatticeTable read_skew_lattice(json const& doc) {
    return guarded([&] {
      json const& j = block(
          doc, "ops",
          {{"lattice"}, {"objects"}, {"system", "objects"}, {"action", "lattice"}},
          "skew lattice");
      auto const  n   = count(field(j, "order"));
      json const& ops = field(j, "ops");
      return SkewLatticeTable{total(field(ops, "meet"), n, "meet"),
                              total(field(ops, "join"), n, "join")};
    });
  }

  GroupTable read_group(json const& doc) {
    return guarded([&] {
      json const& j = block(doc, "ops", {{"group"}, {"action", "group"}}, "group");
      auto const  n = count(field(j, "order"));
      return GroupTable::from_table(total(field(field(j, "ops"), "mul"), n, "mul"));
    });
  }

  FiniteGroupoid read_groupoid(json const& doc) {
    return guarded([&] {
      json const& j = block(doc, "morphisms",
                            {{"groupoid"}, {"system", "groupoid"}}, "groupoid");
      auto const  n = count(field(j, "objects"));
      std::vector<Morphism> ms;
      json const&           mj = field(j, "morphisms");
      if (!mj.is_array()) {
        malformed("morphisms must be an array");
      }
      for (auto const& m : mj) {
        ms.push_back({index(field(m, "dom")), index(field(m, "cod"))});
      }
      auto const         m    = ms.size();
      auto               comp = partial(field(j, "comp"), m, m, "comp");
      auto               inv  = vec(field(j, "inv"));
      std::vector<Index> ids;
      if (j.contains("identity")) {
        ids = vec(j.at("identity"));
      }
      return FiniteGroupoid(n, std::move(ms), std::move(comp), std::move(inv),
                            std::move(ids));
    });
  }

  RestrictionSystem read_system(json const& doc) {
    return guarded([&] {
      json const& j = block(doc, "restL", {{"system"}}, "restriction system");
      auto        g = read_groupoid(field(j, "groupoid"));
      auto        o = read_skew_lattice(field(j, "objects"));
      auto const  n = g.object_count();
      auto const  m = g.morphism_count();
      RestrictionSystem s{std::move(g),
                          std::move(o),
                          partial(field(j, "restL"), n, m, "restL"),
                          partial(field(j, "restR"), m, n, "restR"),
                          partial(field(j, "extL"), n, m, "extL"),
                          partial(field(j, "extR"), m, n, "extR")};
      validate_shape(s);
      return s;
    });
  }

  BiBandAlgebra read_algebra(json const& doc) {
    return guarded([&] {
      json const& j = block(doc, "star", {{"algebra"}}, "algebra");
      auto const  n = count(field(j, "order"));
      return BiBandAlgebra::from_tables(total(field(j, "join"), n, "join"),
                                        total(field(j, "meet"), n, "meet"),
                                        vec(field(j, "star")));
    });
  }

  GroupAction read_action(json const& doc) {
    return guarded([&] {
      json const& j = block(doc, "act", {{"action"}}, "action");
      return GroupAction{read_group(field(j, "group")),
                         read_skew_lattice(field(j, "lattice")),
                         rows(field(j, "act"))};
    });
  }

}  // namespace skewind::json_io
