#include "core/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "core/rewriting.hpp"

namespace monfaces {

GeneratorSet::GeneratorSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw Error(ErrorCode::invalid_argument, "generator names must be nonempty");
    auto [it, inserted] = index_.emplace(names_[i], i);
    if (!inserted)
      throw Error(ErrorCode::invalid_argument,
                  "duplicate generator name: " + names_[i]);
  }
}

std::size_t GeneratorSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error(ErrorCode::invalid_argument, "unknown generator: " + name);
  return it->second;
}

bool GeneratorSet::contains(const std::string& name) const {
  return index_.count(name) != 0;
}

Exponent::Exponent(IntVec coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c < 0)
      throw Error(ErrorCode::invalid_argument,
                  "exponent coordinates must be nonnegative");
}

Exponent Exponent::unit(std::size_t arity, std::size_t i) {
  IntVec v(arity);
  v[i] = 1;
  return Exponent(std::move(v));
}

void check_same_arity(const Exponent& a, const Exponent& b) {
  if (a.arity() != b.arity())
    throw Error(ErrorCode::dimension_mismatch,
                "exponents live over generator sets of different sizes");
}

Exponent Exponent::plus(const Exponent& other) const {
  check_same_arity(*this, other);
  IntVec v(coords_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coords_[i];
  return Exponent(std::move(v));
}

Exponent Exponent::minus(const Exponent& other) const {
  check_same_arity(*this, other);
  IntVec v(coords_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] -= other.coords_[i];
    if (v[i] < 0)
      throw Error(ErrorCode::invalid_argument,
                  "exponent difference leaves the free monoid");
  }
  return Exponent(std::move(v));
}

Exponent Exponent::join(const Exponent& other) const {
  check_same_arity(*this, other);
  IntVec v(coords_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (other.coords_[i] > v[i]) v[i] = other.coords_[i];
  return Exponent(std::move(v));
}

bool Exponent::divides(const Exponent& other) const {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

std::vector<std::size_t> Exponent::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > 0) s.push_back(i);
  return s;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority,
                             IntVec weights)
    : kind_(kind), priority_(std::move(priority)), weights_(std::move(weights)) {
  std::vector<bool> seen(priority_.size(), false);
  for (auto i : priority_) {
    if (i >= priority_.size() || seen[i])
      throw Error(ErrorCode::invalid_argument,
                  "order priority must be a permutation of the generators");
    seen[i] = true;
  }
  if (kind_ == Kind::weighted) {
    if (weights_.size() != priority_.size())
      throw Error(ErrorCode::invalid_argument,
                  "weighted order needs one weight per generator");
    for (const auto& w : weights_)
      if (w <= 0)
        throw Error(ErrorCode::invalid_argument,
                    "weights must be strictly positive");
  } else if (!weights_.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "weights only make sense for the weighted kind");
  }
}

MonomialOrder MonomialOrder::lex(std::size_t arity) {
  std::vector<std::size_t> p(arity);
  for (std::size_t i = 0; i < arity; ++i) p[i] = i;
  return MonomialOrder(Kind::lex, std::move(p));
}

MonomialOrder MonomialOrder::grlex(std::size_t arity) {
  std::vector<std::size_t> p(arity);
  for (std::size_t i = 0; i < arity; ++i) p[i] = i;
  return MonomialOrder(Kind::grlex, std::move(p));
}

MonomialOrder MonomialOrder::elimination(std::size_t arity,
                                         const std::vector<std::size_t>& top) {
  std::vector<bool> on_top(arity, false);
  for (auto i : top) {
    if (i >= arity)
      throw Error(ErrorCode::invalid_argument, "elimination index out of range");
    on_top[i] = true;
  }
  std::vector<std::size_t> p(top.begin(), top.end());
  for (std::size_t i = 0; i < arity; ++i)
    if (!on_top[i]) p.push_back(i);
  return MonomialOrder(Kind::lex, std::move(p));
}

Cmp MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  check_same_arity(a, b);
  if (a.arity() != priority_.size())
    throw Error(ErrorCode::dimension_mismatch,
                "order and exponents disagree on the generator count");
  if (kind_ == Kind::grlex) {
    Int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  } else if (kind_ == Kind::weighted) {
    Int da = dot(weights_, a.coords()), db = dot(weights_, b.coords());
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  }
  for (auto i : priority_) {
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

std::string MonomialOrder::descriptor() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::lex: os << "lex"; break;
    case Kind::grlex: os << "grlex"; break;
    case Kind::weighted: os << "weighted"; break;
  }
  os << ':';
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) os << ',';
    os << priority_[i];
    if (kind_ == Kind::weighted) os << '=' << weights_[priority_[i]];
  }
  return os.str();
}

Presentation::Presentation(GeneratorSet generators,
                           std::vector<Relation> relations)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& rel : relations_) {
    if (rel.lhs.arity() != generators_.size() ||
        rel.rhs.arity() != generators_.size())
      throw Error(ErrorCode::dimension_mismatch,
                  "relation arity does not match the generator set");
  }
}

Exponent Presentation::interior_element() const {
  IntVec v(arity(), Int(1));
  return Exponent(std::move(v));
}

MonomialOrder Presentation::default_order() const {
  return MonomialOrder::grlex(arity());
}

std::shared_ptr<const GroebnerBasis> Presentation::cached_basis(
    const std::string& order_descriptor) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->entries.find(order_descriptor);
  return it == cache_->entries.end() ? nullptr : it->second;
}

void Presentation::store_basis(
    const std::string& order_descriptor,
    std::shared_ptr<const GroebnerBasis> basis) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->entries[order_descriptor] = std::move(basis);  // last write wins
}

Exponent MonoidMap::apply(const Exponent& e) const {
  if (e.arity() != source.arity())
    throw Error(ErrorCode::dimension_mismatch,
                "exponent does not live over the map's source");
  IntVec acc(target.arity());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Int& c = e[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] += c * images[i][j];
  }
  return Exponent(std::move(acc));
}

MonoidMap compose(const MonoidMap& first, const MonoidMap& second) {
  if (!(first.target == second.source))
    throw Error(ErrorCode::dimension_mismatch,
                "composition needs matching middle presentations");
  MonoidMap out{first.source, second.target, {}};
  out.images.reserve(first.images.size());
  for (const auto& img : first.images) out.images.push_back(second.apply(img));
  return out;
}

MapValidation validate_map(const MonoidMap& map) {
  if (map.images.size() != map.source.arity())
    throw Error(ErrorCode::dimension_mismatch,
                "map needs one image per source generator");
  for (const auto& img : map.images)
    if (img.arity() != map.target.arity())
      throw Error(ErrorCode::dimension_mismatch,
                  "map images must live over the target generators");
  GroebnerBasis basis =
      reduced_groebner_basis(map.target, map.target.default_order());
  for (const auto& rel : map.source.relations()) {
    if (!congruent(basis, map.apply(rel.lhs), map.apply(rel.rhs)))
      return MapValidation{false, rel};
  }
  return MapValidation{true, std::nullopt};
}

namespace {

Exponent embed_block(const Exponent& e, std::size_t total, std::size_t offset) {
  IntVec v(total);
  for (std::size_t i = 0; i < e.arity(); ++i) v[offset + i] = e[i];
  return Exponent(std::move(v));
}

}  // namespace

Presentation pushout(const MonoidMap& f, const MonoidMap& g) {
  if (!(f.source == g.source))
    throw Error(ErrorCode::invalid_map, "pushout maps need a common source");
  for (const MonoidMap* m : {&f, &g}) {
    MapValidation v = validate_map(*m);
    if (!v.valid)
      throw Error(ErrorCode::invalid_map,
                  "pushout rejects a map that does not respect relations");
  }

  const Presentation& q = f.target;
  const Presentation& r = g.target;
  std::vector<std::string> names;
  names.reserve(q.arity() + r.arity());
  for (const auto& n : q.generators().names()) names.push_back(n + "_1");
  for (const auto& n : r.generators().names()) names.push_back(n + "_2");
  const std::size_t total = names.size();

  std::vector<Relation> relations;
  for (const auto& rel : q.relations())
    relations.push_back({embed_block(rel.lhs, total, 0),
                         embed_block(rel.rhs, total, 0)});
  for (const auto& rel : r.relations())
    relations.push_back({embed_block(rel.lhs, total, q.arity()),
                         embed_block(rel.rhs, total, q.arity())});
  for (std::size_t p = 0; p < f.source.arity(); ++p)
    relations.push_back({embed_block(f.images[p], total, 0),
                         embed_block(g.images[p], total, q.arity())});

  return Presentation(GeneratorSet(std::move(names)), std::move(relations));
}

}  // namespace monfaces
