#include "skewind/skewind.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "skewind/algebra.hpp"
#include "skewind/enumerate.hpp"
#include "skewind/error.hpp"
#include "skewind/json_io.hpp"
#include "skewind/models.hpp"
#include "skewind/reconstruction.hpp"
#include "skewind/relations.hpp"
#include "skewind/restriction_system.hpp"

struct skw_skew_lattice {
  skewind::SkewLatticeTable value;
};
struct skw_groupoid {
  skewind::FiniteGroupoid value;
};
struct skw_system {
  skewind::RestrictionSystem value;
};
struct skw_algebra {
  skewind::BiBandAlgebra value;
};
struct skw_action {
  skewind::GroupAction value;
};
struct skw_report {
  std::vector<skewind::AxiomReport> sections;
};
struct skw_model_suite {
  std::vector<skewind::ModelInstance> instances;
};

namespace {

  using skewind::ErrorCode;
  namespace jio = skewind::json_io;

  thread_local std::string last_error;
  thread_local std::string last_kind;

  skw_status status_of(ErrorCode c) {
    switch (c) {
      case ErrorCode::malformed_input:
        return SKW_ERR_MALFORMED;
      case ErrorCode::bound_exceeded:
        return SKW_ERR_BOUND;
      case ErrorCode::undefined_composition:
        return SKW_ERR_UNDEFINED;
      case ErrorCode::signature_mismatch:
      case ErrorCode::malformed_system:
      case ErrorCode::axiom_violation:
      case ErrorCode::skeleton_not_closed:
      case ErrorCode::composition_ambiguity:
      case ErrorCode::action_invalid:
      case ErrorCode::roundtrip_failure:
        return SKW_ERR_PRECONDITION;
    }
    return SKW_ERR_INTERNAL;
  }

  skw_status set_error(skw_status s, std::string kind, std::string msg) {
    last_kind  = std::move(kind);
    last_error = std::move(msg);
    return s;
  }

  // Runs f, translating exceptions into status codes.
  template <typename F>
  skw_status guard(F&& f) {
    try {
      last_error.clear();
      last_kind.clear();
      f();
      return SKW_OK;
    } catch (skewind::Error const& e) {
      return set_error(status_of(e.code()), skewind::to_string(e.code()),
                       e.what());
    } catch (std::bad_alloc const&) {
      return set_error(SKW_ERR_INTERNAL, "internal", "out of memory");
    } catch (std::exception const& e) {
      return set_error(SKW_ERR_INTERNAL, "internal", e.what());
    } catch (...) {
      return set_error(SKW_ERR_INTERNAL, "internal", "unknown exception");
    }
  }

  skw_status null_argument() {
    return set_error(SKW_ERR_ARGUMENT, "argument", "null argument");
  }

  char* copy_string(std::string const& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  template <typename Handle, typename Read>
  skw_status load(char const* text, Handle** out, Read read) {
    if (text == nullptr || out == nullptr) {
      return null_argument();
    }
    *out = nullptr;
    return guard([&] { *out = new Handle{read(jio::parse(text))}; });
  }

  template <typename Handle>
  skw_status dump(Handle const* h, char** out) {
    if (h == nullptr || out == nullptr) {
      return null_argument();
    }
    *out = nullptr;
    return guard([&] { *out = copy_string(jio::to_json(h->value).dump()); });
  }

  template <typename F>
  skw_status report(skw_report** out, F&& make) {
    if (out == nullptr) {
      return null_argument();
    }
    *out = nullptr;
    return guard([&] { *out = new skw_report{make()}; });
  }

}  // namespace

extern "C" {

char const* skw_version(void) {
  return "1.0.0";
}

char const* skw_last_error(void) {
  return last_error.c_str();
}

char const* skw_last_error_kind(void) {
  return last_kind.c_str();
}

void skw_string_free(char* s) {
  delete[] s;
}

skw_status skw_skew_lattice_from_json(char const* text, skw_skew_lattice** out) {
  return load(text, out, jio::read_skew_lattice);
}
skw_status skw_skew_lattice_to_json(skw_skew_lattice const* s, char** out) {
  return dump(s, out);
}
void skw_skew_lattice_free(skw_skew_lattice* s) {
  delete s;
}

skw_status skw_groupoid_from_json(char const* text, skw_groupoid** out) {
  return load(text, out, jio::read_groupoid);
}
skw_status skw_groupoid_to_json(skw_groupoid const* g, char** out) {
  return dump(g, out);
}
void skw_groupoid_free(skw_groupoid* g) {
  delete g;
}

skw_status skw_system_from_json(char const* text, skw_system** out) {
  return load(text, out, jio::read_system);
}
skw_status skw_system_to_json(skw_system const* s, char** out) {
  return dump(s, out);
}
void skw_system_free(skw_system* s) {
  delete s;
}

skw_status skw_algebra_from_json(char const* text, skw_algebra** out) {
  return load(text, out, jio::read_algebra);
}
skw_status skw_algebra_to_json(skw_algebra const* a, char** out) {
  return dump(a, out);
}
void skw_algebra_free(skw_algebra* a) {
  delete a;
}

skw_status skw_action_from_json(char const* text, skw_action** out) {
  return load(text, out, jio::read_action);
}
void skw_action_free(skw_action* a) {
  delete a;
}

skw_status skw_check_skew_lattice(skw_skew_lattice const* s, skw_report** out) {
  if (s == nullptr) {
    return null_argument();
  }
  return report(out, [&] {
    return std::vector{skewind::check_skew_lattice(s->value)};
  });
}

skw_status skw_check_groupoid(skw_groupoid const* g, skw_report** out) {
  if (g == nullptr) {
    return null_argument();
  }
  return report(out, [&] {
    return std::vector{skewind::check_groupoid(g->value)};
  });
}

skw_status skw_check_system(skw_system const* s, skw_report** out) {
  if (s == nullptr) {
    return null_argument();
  }
  return report(out, [&] { return skewind::check_system(s->value); });
}

skw_status skw_check_algebra(skw_algebra const* a, skw_report** out) {
  if (a == nullptr) {
    return null_argument();
  }
  return report(out, [&] {
    return std::vector{skewind::check_axioms(a->value),
                       skewind::check_skehr(a->value)};
  });
}

skw_status skw_check_action(skw_action const* a, skw_report** out) {
  if (a == nullptr) {
    return null_argument();
  }
  return report(out, [&] {
    std::vector sections{skewind::check_action(a->value)};
    if (sections.front().pass()) {
      auto const s = skewind::semidirect_algebra(a->value);
      sections.push_back(skewind::check_semidirect_properties(a->value, s));
      sections.push_back(skewind::congruence_kernels(a->value).report);
    }
    return sections;
  });
}

int skw_report_passed(skw_report const* r) {
  return r != nullptr && skw_report_first_failing_section(r) < 0 ? 1 : 0;
}

size_t skw_report_section_count(skw_report const* r) {
  return r == nullptr ? 0 : r->sections.size();
}

int skw_report_first_failing_section(skw_report const* r) {
  if (r == nullptr) {
    return -1;
  }
  for (std::size_t i = 0; i < r->sections.size(); ++i) {
    if (!r->sections[i].pass()) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

skw_status skw_report_to_json(skw_report const* r, char** out) {
  if (r == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    auto sections = jio::json::array();
    for (auto const& s : r->sections) {
      sections.push_back(jio::to_json(s));
    }
    *out = copy_string(sections.dump());
  });
}

skw_status skw_report_summary(skw_report const* r, char** out) {
  if (r == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    std::string text;
    for (auto const& s : r->sections) {
      text += s.summary() + "\n";
    }
    *out = copy_string(text);
  });
}

void skw_report_free(skw_report* r) {
  delete r;
}

skw_status skw_anti_automorphism_witness(skw_algebra const* a,
                                         int*               found,
                                         char**             out) {
  if (a == nullptr || found == nullptr || out == nullptr) {
    return null_argument();
  }
  *found = 0;
  *out   = nullptr;
  return guard([&] {
    if (auto w = skewind::anti_automorphism_witness(a->value)) {
      *found = 1;
      *out   = copy_string(
          jio::json{{"s", w->s}, {"t", w->t}, {"op", skewind::to_string(w->op)}}
              .dump());
    }
  });
}

skw_status skw_build_algebra(skw_system const* s, skw_algebra** out) {
  if (s == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    *out = new skw_algebra{skewind::build_algebra(s->value).algebra};
  });
}

skw_status skw_reconstruct(skw_algebra const* a, skw_system** out) {
  if (a == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    *out = new skw_system{skewind::reconstruct(a->value).system};
  });
}

skw_status skw_roundtrip_system(skw_system const* s, char** out) {
  if (s == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    auto const iso = skewind::roundtrip_groupoid(s->value);
    *out           = copy_string(jio::json{{"objects", iso.objects.map},
                                           {"morphisms", iso.morphisms.map}}
                               .dump());
  });
}

skw_status skw_roundtrip_algebra(skw_algebra const* a, char** out) {
  if (a == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    *out = copy_string(jio::to_json(skewind::roundtrip_algebra(a->value)).dump());
  });
}

skw_status skw_enumerate_bands(size_t n, size_t bound, char** out) {
  if (out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    auto list = jio::json::array();
    for (auto const& t : skewind::enumerate_bands(n, bound)) {
      list.push_back(t.to_rows());
    }
    *out = copy_string(list.dump());
  });
}

skw_status skw_enumerate_skew_lattices(size_t n, size_t bound, char** out) {
  if (out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    auto list = jio::json::array();
    for (auto const& s : skewind::enumerate_skew_lattices(n, bound)) {
      list.push_back(jio::to_json(s));
    }
    *out = copy_string(list.dump());
  });
}

skw_status skw_generate_models(size_t max_group,
                               size_t max_band,
                               skw_model_suite** out) {
  if (out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guard([&] {
    *out = new skw_model_suite{
        skewind::generate_model_suite(skewind::SuiteBounds{max_group, max_band})};
  });
}

size_t skw_model_suite_size(skw_model_suite const* m) {
  return m == nullptr ? 0 : m->instances.size();
}

char const* skw_model_suite_name(skw_model_suite const* m, size_t i) {
  if (m == nullptr || i >= m->instances.size()) {
    return nullptr;
  }
  return m->instances[i].name.c_str();
}

skw_status skw_model_suite_instance_json(skw_model_suite const* m,
                                         size_t                 i,
                                         char**                 out) {
  if (m == nullptr || out == nullptr) {
    return null_argument();
  }
  if (i >= m->instances.size()) {
    return set_error(SKW_ERR_ARGUMENT, "argument", "instance index out of range");
  }
  *out = nullptr;
  return guard([&] { *out = copy_string(jio::to_json(m->instances[i]).dump()); });
}

void skw_model_suite_free(skw_model_suite* m) {
  delete m;
}

}  // extern "C"
