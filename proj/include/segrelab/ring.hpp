#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "segrelab/errors.hpp"
#include "segrelab/monomial.hpp"

namespace segrelab {

// A polynomial ring: a coefficient field context, named variables, and a
// monomial order.  Rings are immutable and passed by shared_ptr; two rings
// are interchangeable iff same_ring() holds (field, variables, order all
// agree).
template <class F>
class poly_ring {
 public:
  poly_ring(F field, std::vector<std::string> vars,
            monomial_order order = monomial_order::grevlex())
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
    if (vars_.empty()) throw precondition_error("ring needs at least one variable");
    if (order_.kind == monomial_order::kind_t::block &&
        (order_.split == 0 || order_.split >= vars_.size()))
      throw precondition_error("block order split must cut the variable list in two");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j])
          throw precondition_error("duplicate variable name: " + vars_[i]);
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const monomial_order& order() const { return order_; }

  // Index of a named variable, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? npos : static_cast<std::size_t>(it - vars_.begin());
  }

  bool same_ring(const poly_ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  F field_;
  std::vector<std::string> vars_;
  monomial_order order_;
};

template <class F>
using ring_ptr = std::shared_ptr<const poly_ring<F>>;

template <class F>
ring_ptr<F> make_ring(F field, std::vector<std::string> vars,
                      monomial_order order = monomial_order::grevlex()) {
  return std::make_shared<const poly_ring<F>>(std::move(field), std::move(vars),
                                              order);
}

// Same ring, different order.  Used for elimination and order-independence
// checks; polynomials carry over term-by-term.
template <class F>
ring_ptr<F> with_order(const ring_ptr<F>& r, monomial_order order) {
  return make_ring(r->field(), r->vars(), order);
}

template <class F>
void require_same_ring(const ring_ptr<F>& a, const ring_ptr<F>& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_ring(*b))
    throw ring_mismatch_error("operands live in different rings");
}

}  // namespace segrelab
