#ifndef MONFACES_REWRITING_HPP
#define MONFACES_REWRITING_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/presentation.hpp"

namespace monfaces {

/// Comparator signature shared by public monomial orders and the internal
/// elimination extensions used by variable adjunction.
using CompareFn = std::function<Cmp(const Exponent&, const Exponent&)>;

/// Finite oriented rule set whose heads generate the initial ideal of the
/// congruence. Rules are kept sorted by descending head so that rewriting
/// always applies the largest applicable head, which makes normal-form
/// traces deterministic.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<Rule> rules, bool reduced);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool reduced() const { return reduced_; }
  std::size_t arity() const { return order_.arity(); }

  bool operator==(const GroebnerBasis& other) const {
    return order_ == other.order_ && rules_ == other.rules_ &&
           reduced_ == other.reduced_;
  }

 private:
  MonomialOrder order_;
  std::vector<Rule> rules_;  // descending heads
  bool reduced_ = false;
};

/// Called once per rule application with the rule used and the result.
using TraceFn = std::function<void(const Rule&, const Exponent&)>;

/// Order-minimum of a's congruence class. Applies the largest applicable
/// head until no head divides the word; terminates because every step
/// strictly decreases the word in the well-order.
Exponent normal_form(const GroebnerBasis& basis, const Exponent& a,
                     const TraceFn& trace = nullptr);

bool congruent(const GroebnerBasis& basis, const Exponent& a,
               const Exponent& b);

/// Monoidal Buchberger completion of the congruence generated by the
/// relations. Scheduling: FIFO queue of candidate pairs, both sides reduced
/// to normal form before a pair becomes a rule; trivial pairs dropped.
GroebnerBasis buchberger(const Presentation& pres, const MonomialOrder& order);

/// The unique reduced basis of the same congruence: heads are the minimal
/// generators of the initial ideal, bodies their normal forms, rules stored
/// by descending head. Canonical for a given congruence and order.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// reduce_basis(buchberger(...)) with the presentation's thread-safe memo in
/// front of it. Everything downstream (validation, faces, quotients) goes
/// through here.
GroebnerBasis reduced_groebner_basis(const Presentation& pres,
                                     const MonomialOrder& order);

/// Confluence check: every S-pair of the rule list rewrites to a trivial
/// pair. Together with the rules being congruent pairs this certifies a
/// Groebner basis; used by tests and the cache invariant.
bool is_groebner(const GroebnerBasis& basis);

/// Completion over an arbitrary comparator (used internally for orders that
/// put an adjoined variable strictly above the original generators). Returns
/// rules sorted by descending head.
std::vector<Rule> buchberger_rules(const std::vector<Relation>& relations,
                                   const CompareFn& cmp);
std::vector<Rule> reduce_rules(std::vector<Rule> rules, const CompareFn& cmp);
Exponent normal_form_rules(const std::vector<Rule>& rules_desc,
                           const Exponent& a, const TraceFn& trace = nullptr);

/// Brute-force congruence oracle: the restriction to the box
/// {total degree <= bound} of the symmetric, transitive, monoidal closure of
/// the relations, computed by union-find over every translate of a relation
/// that stays inside the box. Sound but box-limited: a pair is merged only
/// when some connecting chain stays inside the box, so callers pick bounds
/// generously. Under a degree-compatible order the box is exact, since
/// rewriting never raises total degree.
class CongruenceClosure {
 public:
  CongruenceClosure(const Presentation& pres, long long degree_bound,
                    const Caps& caps = Caps{});

  long long degree_bound() const { return degree_bound_; }
  std::size_t cell_count() const { return cells_.size(); }

  bool contains(const Exponent& a) const;
  bool same_class(const Exponent& a, const Exponent& b) const;
  std::vector<Exponent> class_of(const Exponent& a) const;
  /// All classes, canonically sorted (each class sorted, classes by their
  /// least element).
  std::vector<std::vector<Exponent>> classes() const;

 private:
  std::size_t index_of(const Exponent& a) const;
  std::size_t find(std::size_t i) const;

  long long degree_bound_;
  std::vector<Exponent> cells_;
  std::map<IntVec, std::size_t> index_;
  mutable std::vector<std::size_t> parent_;
};

}  // namespace monfaces

#endif
