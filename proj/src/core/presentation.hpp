#ifndef MONFACES_PRESENTATION_HPP
#define MONFACES_PRESENTATION_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "core/error.hpp"

namespace monfaces {

/// Ordered set of generator names for a free commutative monoid. The
/// declared order is canonical for the lifetime of a presentation: exponent
/// coordinates, serialization and default monomial orders all follow it.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  /// Index of a name; invalid_argument if unknown.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool operator==(const GeneratorSet& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

/// Element of the free monoid: one nonnegative integer per generator.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(IntVec coords);
  static Exponent zero(std::size_t arity) { return Exponent(IntVec(arity)); }
  static Exponent unit(std::size_t arity, std::size_t i);

  std::size_t arity() const { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  const IntVec& coords() const { return coords_; }

  Int degree() const { return vec_sum(coords_); }
  bool is_zero() const { return is_zero_vec(coords_); }

  Exponent plus(const Exponent& other) const;
  /// Componentwise difference; requires other to divide *this.
  Exponent minus(const Exponent& other) const;
  /// Componentwise maximum (the join used to eliminate initial terms).
  Exponent join(const Exponent& other) const;
  /// True when every coordinate of *this is <= the matching one of other,
  /// i.e. *this + F contains other.
  bool divides(const Exponent& other) const;

  /// Indices of the strictly positive coordinates.
  std::vector<std::size_t> support() const;

  bool operator==(const Exponent& other) const {
    return coords_ == other.coords_;
  }
  bool operator!=(const Exponent& other) const { return !(*this == other); }
  bool operator<(const Exponent& other) const {  // container order only
    return lex_cmp(coords_, other.coords_) < 0;
  }

 private:
  IntVec coords_;
};

void check_same_arity(const Exponent& a, const Exponent& b);

/// Unoriented pair (lhs, rhs) of congruent words. Orientation into rules
/// happens only relative to a monomial order.
struct Relation {
  Exponent lhs;
  Exponent rhs;

  bool operator==(const Relation& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
};

/// Oriented rewriting rule head -> body with head > body under the order it
/// was built for.
struct Rule {
  Exponent head;
  Exponent body;

  bool operator==(const Rule& other) const {
    return head == other.head && body == other.body;
  }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Total monoidal well-order on exponents. Three kinds: lex, graded lex and
/// weighted graded lex with strictly positive weights, each over an explicit
/// generator priority (highest first). All three are monoidal well-orders by
/// construction.
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, weighted };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<std::size_t> priority,
                IntVec weights = {});

  /// Lex / graded lex in the declared generator order.
  static MonomialOrder lex(std::size_t arity);
  static MonomialOrder grlex(std::size_t arity);
  /// Lex order whose priority puts the block `top` (in the given order)
  /// strictly above the remaining generators; any word meeting the top block
  /// beats every word supported outside it.
  static MonomialOrder elimination(std::size_t arity,
                                   const std::vector<std::size_t>& top);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  const IntVec& weights() const { return weights_; }
  std::size_t arity() const { return priority_.size(); }

  Cmp compare(const Exponent& a, const Exponent& b) const;

  /// Stable key used for the Groebner cache and serialization.
  std::string descriptor() const;

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && priority_ == other.priority_ &&
           weights_ == other.weights_;
  }

 private:
  Kind kind_ = Kind::grlex;
  std::vector<std::size_t> priority_;
  IntVec weights_;
};

class GroebnerBasis;

/// Finitely presented commutative monoid M = F/R: a generator set plus a
/// finite list of relations. Immutable after construction; carries a
/// thread-safe memo of reduced Groebner bases keyed by order descriptor
/// (shared across copies).
class Presentation {
 public:
  Presentation() : cache_(std::make_shared<Cache>()) {}
  Presentation(GeneratorSet generators, std::vector<Relation> relations);

  const GeneratorSet& generators() const { return generators_; }
  std::size_t arity() const { return generators_.size(); }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Exponent with every coordinate 1: the canonical interior element.
  Exponent interior_element() const;

  /// Default canonical order: graded lex in the declared generator order.
  MonomialOrder default_order() const;

  std::shared_ptr<const GroebnerBasis> cached_basis(
      const std::string& order_descriptor) const;
  void store_basis(const std::string& order_descriptor,
                   std::shared_ptr<const GroebnerBasis> basis) const;

  bool operator==(const Presentation& other) const {
    return generators_ == other.generators_ && relations_ == other.relations_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> entries;
  };

  GeneratorSet generators_;
  std::vector<Relation> relations_;
  std::shared_ptr<Cache> cache_;
};

/// Homomorphism between presented monoids, given by one target exponent per
/// source generator.
struct MonoidMap {
  Presentation source;
  Presentation target;
  std::vector<Exponent> images;  // one per source generator

  /// Push a source exponent through the map.
  Exponent apply(const Exponent& e) const;
};

MonoidMap compose(const MonoidMap& first, const MonoidMap& second);

struct MapValidation {
  bool valid = true;
  std::optional<Relation> witness;  // violating source relation when invalid
};

/// True iff every source relation maps to a congruent pair in the target;
/// the first violating relation is returned as witness otherwise.
MapValidation validate_map(const MonoidMap& map);

/// Presentation of the pushout Q +_P R of validated maps f : P -> Q and
/// g : P -> R. Generators are the disjoint union (Q names suffixed "_1", R
/// names "_2"); relations are Q's, R's, and one gluing relation
/// (f(p) in the Q block, g(p) in the R block) per generator p of P.
Presentation pushout(const MonoidMap& f, const MonoidMap& g);

}  // namespace monfaces

#endif
