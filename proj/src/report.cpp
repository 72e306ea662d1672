#include "skewind/report.hpp"

#include <sstream>

namespace skewind {

  Flag& AxiomReport::add(std::string name, std::string roles) {
    _flags.push_back(Flag{std::move(name), true, std::move(roles), {}, {}});
    return _flags.back();
  }

  Flag& AxiomReport::observe(std::string name, std::string roles) {
    _observations.push_back(
        Flag{std::move(name), true, std::move(roles), {}, {}});
    return _observations.back();
  }

  void AxiomReport::merge(AxiomReport const& other,
                          std::string const& prefix) {
    for (auto f : other._flags) {
      f.name = prefix + f.name;
      _flags.push_back(std::move(f));
    }
    for (auto f : other._observations) {
      f.name = prefix + f.name;
      _observations.push_back(std::move(f));
    }
  }

  bool AxiomReport::pass() const noexcept {
    return first_failure() == nullptr;
  }

  Flag const* AxiomReport::find(std::string const& name) const noexcept {
    for (auto const& f : _flags) {
      if (f.name == name) {
        return &f;
      }
    }
    return nullptr;
  }

  Flag const* AxiomReport::find_observation(
      std::string const& name) const noexcept {
    for (auto const& f : _observations) {
      if (f.name == name) {
        return &f;
      }
    }
    return nullptr;
  }

  Flag const* AxiomReport::first_failure() const noexcept {
    for (auto const& f : _flags) {
      if (!f.pass) {
        return &f;
      }
    }
    return nullptr;
  }

  std::string AxiomReport::summary() const {
    std::ostringstream out;
    std::size_t        failed = 0;
    for (auto const& f : _flags) {
      failed += f.pass ? 0 : 1;
    }
    out << (_title.empty() ? "report" : _title) << ": "
        << (_flags.size() - failed) << "/" << _flags.size() << " pass";
    for (auto const& f : _flags) {
      if (!f.pass) {
        out << "\n  FAIL " << f.name << " at (" << f.roles << ") = (";
        for (std::size_t i = 0; i < f.witness.size(); ++i) {
          out << (i ? "," : "") << f.witness[i];
        }
        out << ")";
        if (!f.note.empty()) {
          out << " " << f.note;
        }
      }
    }
    return out.str();
  }

}  // namespace skewind
