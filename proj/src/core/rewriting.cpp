#include "core/rewriting.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace monfaces {

namespace {

void sort_rules_desc(std::vector<Rule>& rules, const CompareFn& cmp) {
  std::sort(rules.begin(), rules.end(), [&](const Rule& x, const Rule& y) {
    Cmp c = cmp(x.head, y.head);
    if (c != Cmp::EQ) return c == Cmp::GT;
    return cmp(x.body, y.body) == Cmp::GT;
  });
}

CompareFn order_fn(const MonomialOrder& order) {
  return [order](const Exponent& a, const Exponent& b) {
    return order.compare(a, b);
  };
}

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Rule> rules,
                             bool reduced)
    : order_(std::move(order)), rules_(std::move(rules)), reduced_(reduced) {
  for (const auto& r : rules_) {
    if (order_.compare(r.head, r.body) != Cmp::GT)
      throw Error(ErrorCode::invalid_argument,
                  "rule head must strictly exceed its body");
  }
  sort_rules_desc(rules_, order_fn(order_));
}

Exponent normal_form_rules(const std::vector<Rule>& rules_desc,
                           const Exponent& a, const TraceFn& trace) {
  Exponent cur = a;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const auto& rule : rules_desc) {  // largest applicable head first
      if (rule.head.divides(cur)) {
        cur = cur.minus(rule.head).plus(rule.body);
        if (trace) trace(rule, cur);
        progressed = true;
        break;
      }
    }
  }
  return cur;
}

Exponent normal_form(const GroebnerBasis& basis, const Exponent& a,
                     const TraceFn& trace) {
  return normal_form_rules(basis.rules(), a, trace);
}

bool congruent(const GroebnerBasis& basis, const Exponent& a,
               const Exponent& b) {
  return normal_form(basis, a) == normal_form(basis, b);
}

std::vector<Rule> buchberger_rules(const std::vector<Relation>& relations,
                                   const CompareFn& cmp) {
  std::vector<Rule> rules;  // kept sorted by descending head
  std::deque<Relation> pending(relations.begin(), relations.end());

  auto insert_sorted = [&](Rule rule) {
    auto pos = std::upper_bound(
        rules.begin(), rules.end(), rule, [&](const Rule& x, const Rule& y) {
          Cmp c = cmp(x.head, y.head);
          if (c != Cmp::EQ) return c == Cmp::GT;
          return cmp(x.body, y.body) == Cmp::GT;
        });
    rules.insert(pos, std::move(rule));
  };

  while (!pending.empty()) {
    Relation rel = pending.front();
    pending.pop_front();
    Exponent a = normal_form_rules(rules, rel.lhs);
    Exponent b = normal_form_rules(rules, rel.rhs);
    Cmp c = cmp(a, b);
    if (c == Cmp::EQ) continue;  // trivial pair
    Rule rule = c == Cmp::GT ? Rule{a, b} : Rule{b, a};
    if (std::find(rules.begin(), rules.end(), rule) != rules.end())
      continue;  // duplicate (cannot occur after full reduction, but cheap)
#ifndef NDEBUG
    // Both sides are normal forms, so no existing head divides the new head:
    // the initial ideal grows strictly at every round.
    for (const auto& other : rules)
      assert(!other.head.divides(rule.head));
#endif
    for (const auto& other : rules) {
      Exponent join = rule.head.join(other.head);
      pending.push_back({rule.body.plus(join.minus(rule.head)),
                         other.body.plus(join.minus(other.head))});
    }
    insert_sorted(std::move(rule));
  }
  return rules;
}

GroebnerBasis buchberger(const Presentation& pres,
                         const MonomialOrder& order) {
  std::vector<Rule> rules = buchberger_rules(pres.relations(), order_fn(order));
  return GroebnerBasis(order, std::move(rules), false);
}

std::vector<Rule> reduce_rules(std::vector<Rule> rules, const CompareFn& cmp) {
  sort_rules_desc(rules, cmp);
  // Keep only the minimal generators of the initial ideal.
  std::vector<Rule> minimal;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (i == j) continue;
      if (rules[j].head == rules[i].head) {
        redundant = j < i;  // equal heads: keep the first occurrence
      } else {
        redundant = rules[j].head.divides(rules[i].head);
      }
      if (redundant) break;
    }
    if (!redundant) minimal.push_back(rules[i]);
  }
  // Bodies become the true normal forms, computed with the full input basis.
  std::vector<Rule> out;
  out.reserve(minimal.size());
  for (const auto& r : minimal)
    out.push_back({r.head, normal_form_rules(rules, r.head)});
  sort_rules_desc(out, cmp);
  return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  std::vector<Rule> out = reduce_rules(basis.rules(), order_fn(basis.order()));
  return GroebnerBasis(basis.order(), std::move(out), true);
}

GroebnerBasis reduced_groebner_basis(const Presentation& pres,
                                     const MonomialOrder& order) {
  const std::string key = order.descriptor();
  if (auto hit = pres.cached_basis(key)) return *hit;
  GroebnerBasis reduced = reduce_basis(buchberger(pres, order));
  pres.store_basis(key, std::make_shared<const GroebnerBasis>(reduced));
  return reduced;
}

bool is_groebner(const GroebnerBasis& basis) {
  const auto& rules = basis.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      Exponent join = rules[i].head.join(rules[j].head);
      Exponent left = rules[i].body.plus(join.minus(rules[i].head));
      Exponent right = rules[j].body.plus(join.minus(rules[j].head));
      if (normal_form_rules(rules, left) != normal_form_rules(rules, right))
        return false;
    }
  }
  return true;
}

CongruenceClosure::CongruenceClosure(const Presentation& pres,
                                     long long degree_bound, const Caps& caps)
    : degree_bound_(degree_bound) {
  if (degree_bound < 0)
    throw Error(ErrorCode::invalid_argument, "oracle bound must be >= 0");
  const std::size_t n = pres.arity();

  // Number of exponents with total degree <= bound is C(bound + n, n).
  Int cells = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    cells = cells * (Int(degree_bound) + Int(i)) / Int(i);
    if (cells > caps.oracle_cell_cap)
      throw Error(ErrorCode::oracle_too_large,
                  "oracle box exceeds the configured cell cap");
  }

  // Enumerate the box in lexicographic coordinate order.
  IntVec current(n);
  Int used = 0;
  std::size_t pos = 0;
  std::function<void()> emit = [&]() {
    if (pos == n) {
      index_.emplace(current, cells_.size());
      cells_.push_back(Exponent(current));
      return;
    }
    Int limit = Int(degree_bound) - used;
    for (Int v = 0; v <= limit; ++v) {
      current[pos] = v;
      used += v;
      ++pos;
      emit();
      --pos;
      used -= v;
    }
    current[pos] = 0;
  };
  if (n == 0) {
    index_.emplace(IntVec{}, 0);
    cells_.push_back(Exponent(IntVec{}));
  } else {
    emit();
  }

  parent_.resize(cells_.size());
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});

  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  };

  // Union every translate (a+c, b+c) of every relation that stays in the box.
  for (const auto& rel : pres.relations()) {
    Int da = rel.lhs.degree(), db = rel.rhs.degree();
    Int slack = Int(degree_bound) - (da > db ? da : db);
    if (slack < 0) continue;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i].degree() > slack) continue;
      unite(index_of(rel.lhs.plus(cells_[i])),
            index_of(rel.rhs.plus(cells_[i])));
    }
  }
}

std::size_t CongruenceClosure::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

std::size_t CongruenceClosure::index_of(const Exponent& a) const {
  auto it = index_.find(a.coords());
  if (it == index_.end())
    throw Error(ErrorCode::invalid_argument,
                "exponent lies outside the oracle box");
  return it->second;
}

bool CongruenceClosure::contains(const Exponent& a) const {
  return index_.count(a.coords()) != 0;
}

bool CongruenceClosure::same_class(const Exponent& a, const Exponent& b) const {
  return find(index_of(a)) == find(index_of(b));
}

std::vector<Exponent> CongruenceClosure::class_of(const Exponent& a) const {
  std::size_t root = find(index_of(a));
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (find(i) == root) out.push_back(cells_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Exponent>> CongruenceClosure::classes() const {
  std::map<std::size_t, std::vector<Exponent>> buckets;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    buckets[find(i)].push_back(cells_[i]);
  std::vector<std::vector<Exponent>> out;
  for (auto& [root, cls] : buckets) {
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace monfaces
