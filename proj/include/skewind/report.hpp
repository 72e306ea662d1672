#ifndef SKEWIND_REPORT_HPP_
#define SKEWIND_REPORT_HPP_

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "tables.hpp"

namespace skewind {

  //! One named check. A failed check always carries the first violating
  //! tuple, in input-index terms, labelled by `roles` (e.g. "a,f,b").
  struct Flag {
    std::string        name;
    bool               pass = true;
    std::string        roles;
    std::vector<Index> witness;
    std::string        note;
  };

  //! A list of flags plus observations. References returned by add and
  //! observe stay valid as more flags are added. Observations record facts about
  //! an instance (identities that are expected to fail in general, say)
  //! and never affect pass().
  class AxiomReport {
   public:
    AxiomReport() = default;
    explicit AxiomReport(std::string title) : _title(std::move(title)) {}

    std::string const& title() const noexcept {
      return _title;
    }

    Flag& add(std::string name, std::string roles = {});
    Flag& observe(std::string name, std::string roles = {});

    //! Adds every flag and observation of other, prefixing names.
    void merge(AxiomReport const& other, std::string const& prefix = {});

    bool pass() const noexcept;

    std::deque<Flag> const& flags() const noexcept {
      return _flags;
    }
    std::deque<Flag> const& observations() const noexcept {
      return _observations;
    }

    //! nullptr when absent.
    Flag const* find(std::string const& name) const noexcept;
    Flag const* find_observation(std::string const& name) const noexcept;
    Flag const* first_failure() const noexcept;

    std::string summary() const;

   private:
    std::string       _title;
    std::deque<Flag>  _flags;
    std::deque<Flag>  _observations;
  };

  namespace detail {
    //! Records the first counterexample for a flag and nothing after it.
    inline void fail(Flag& f, std::vector<Index> witness) {
      if (f.pass) {
        f.pass    = false;
        f.witness = std::move(witness);
      }
    }
    inline void require(Flag& f, bool ok, std::vector<Index> witness) {
      if (!ok) {
        fail(f, std::move(witness));
      }
    }
  }  // namespace detail

}  // namespace skewind

#endif  // SKEWIND_REPORT_HPP_
