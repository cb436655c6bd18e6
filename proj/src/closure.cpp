#include "fintop/closure.hpp"

#include <algorithm>

namespace fintop {

namespace {

ClosureResult make_result(const CMap& m, const CMap& closure) {
  if (!is_embedding(closure))
    fail(Errc::internal_error, "computed closure is not an embedding");
  // the dense part sends x to the unique preimage of m(x) under the closure
  std::vector<Pt> where(std::size_t(closure.cod().points()), -1);
  for (std::size_t i = 0; i < closure.table().size(); ++i)
    where[std::size_t(closure.table()[i])] = Pt(i);
  std::vector<Pt> d(std::size_t(m.dom().points()), 0);
  for (int x = 0; x < m.dom().points(); ++x) {
    Pt w = where[std::size_t(m(x))];
    if (w < 0) fail(Errc::internal_error, "closure does not contain the original subobject");
    d[std::size_t(x)] = w;
  }
  ClosureResult out;
  out.original = m;
  out.closure = closure;
  out.dense_part = CMap(m.dom(), closure.dom(), std::move(d));
  if (compose(out.closure, out.dense_part).table() != m.table())
    fail(Errc::internal_error, "closure factorization does not commute");
  out.is_dense = closure.surjective();
  out.is_closed = image_points(closure) == image_points(m);
  return out;
}

}  // namespace

ClosureResult regular_closure(const Subcategory& ctx, const CMap& m, const Budget& budget) {
  if (!is_embedding(m)) fail(Errc::not_an_embedding, "regular closure is defined for embeddings");
  Cospan cp = cokernel_pair(m, budget);
  Reflection r = ctx.reflect(cp.left.cod(), budget);
  CMap eq = equalizer(compose(r.arrow, cp.left), compose(r.arrow, cp.right));
  return make_result(m, eq);
}

ClosureResult orthogonal_closure(const Subcategory& ctx, const CMap& m, const Budget& budget) {
  if (!is_embedding(m)) fail(Errc::not_an_embedding, "orthogonal closure is defined for embeddings");
  Reflection rx = ctx.reflect(m.dom(), budget);
  // pushout of m along r_X, reflected into the ambient category
  Cospan po = pushout(m, rx.arrow, budget);
  Reflection re = ctx.ambient_reflect(po.left.cod(), budget);
  CMap rbar = compose(re.arrow, po.left);   // Y -> P
  CMap mbar = compose(re.arrow, po.right);  // RX -> P
  Span pb = pullback(mbar, rbar, budget);   // legs into RX (left) and Y (right)
  CMap candidate = pb.right;
  if (!is_embedding(candidate))
    fail(Errc::internal_error, "orthogonal closure leg is not an embedding");
  // normalize the carrier to the image subspace so closures compare cleanly
  return make_result(m, subspace(m.cod(), image_points(candidate)).second);
}

ClosureResult apply_closure(const Subcategory& ctx, ClosureOp op, const CMap& m,
                            const Budget& budget) {
  return op == ClosureOp::regular ? regular_closure(ctx, m, budget)
                                  : orthogonal_closure(ctx, m, budget);
}

namespace {

std::string mask_to_text(Mask m, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if ((m >> i) & 1u) {
      if (!first) s += ' ';
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

const char* op_name(ClosureOp op) { return op == ClosureOp::regular ? "reg" : "ort"; }

}  // namespace

AxiomReport operator_axioms(const Subcategory& ctx, ClosureOp op, int n_max,
                            const Budget& budget) {
  AxiomReport rep;
  rep.context = ctx.name();
  rep.op = op_name(op);
  rep.n_max = n_max;
  auto ambient = [&](const FinSpace& s) { return ctx.ambient_member(s); };
  const auto reps = member_reps(ambient, n_max);

  // every embedding into y is isomorphic, as a subobject, to a subset inclusion,
  // and closures only depend on the subobject, so subsets of y suffice
  for (const FinSpace& y : reps) {
    const int n = y.points();
    std::vector<ClosureResult> closure_of(std::size_t(1) << n);
    for (Mask s = 0; s < (Mask(1) << n); ++s)
      closure_of[std::size_t(s)] = apply_closure(ctx, op, subspace64(y, s).second, budget);
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
      ++rep.checks;
      // axiom: m <= c(m)
      if (!subobject_leq(closure_of[std::size_t(s)].original, closure_of[std::size_t(s)].closure))
        rep.violations.push_back("extensiveness fails for subset " + mask_to_text(s, n) + " of " +
                                 std::to_string(n) + "-point space");
      for (Mask t = 0; t < (Mask(1) << n); ++t) {
        if ((s & ~t) != 0) continue;  // need s subset t
        ++rep.checks;
        if (!subobject_leq(closure_of[std::size_t(s)].closure, closure_of[std::size_t(t)].closure))
          rep.violations.push_back("monotonicity fails for subsets " + mask_to_text(s, n) + " <= " +
                                   mask_to_text(t, n) + " of " + std::to_string(n) +
                                   "-point space");
      }
    }
    // axiom: c(f^{-1}(m)) <= f^{-1}(c(m)) for every map f : x -> y
    for (const FinSpace& x : reps) {
      std::vector<ClosureResult> closure_in_x(std::size_t(1) << x.points());
      bool have_x = false;
      for (const CMap& f : hom_set(x, y, budget)) {
        if (!have_x) {
          for (Mask s = 0; s < (Mask(1) << x.points()); ++s)
            closure_in_x[std::size_t(s)] = apply_closure(ctx, op, subspace64(x, s).second, budget);
          have_x = true;
        }
        for (Mask s = 0; s < (Mask(1) << n); ++s) {
          ++rep.checks;
          Mask pre = 0;
          for (int p = 0; p < x.points(); ++p)
            if ((s >> f(p)) & 1u) pre |= Mask(1) << p;
          Mask closure_pre = image_mask64(closure_in_x[std::size_t(pre)].closure);
          Mask pre_closure = 0;
          Mask cy = image_mask64(closure_of[std::size_t(s)].closure);
          for (int p = 0; p < x.points(); ++p)
            if ((cy >> f(p)) & 1u) pre_closure |= Mask(1) << p;
          if (closure_pre & ~pre_closure)
            rep.violations.push_back("continuity fails for subset " + mask_to_text(s, n) +
                                     " along a map into the " + std::to_string(n) +
                                     "-point space");
        }
      }
    }
  }
  return rep;
}

AxiomReport hereditary_idempotent(const Subcategory& ctx, ClosureOp op, int n_max,
                                  const Budget& budget) {
  AxiomReport rep;
  rep.context = ctx.name();
  rep.op = op_name(op);
  rep.n_max = n_max;
  auto ambient = [&](const FinSpace& s) { return ctx.ambient_member(s); };
  for (const FinSpace& y : member_reps(ambient, n_max)) {
    const int n = y.points();
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
      CMap m = subspace64(y, s).second;
      ClosureResult c = apply_closure(ctx, op, m, budget);
      ++rep.checks;
      ClosureResult cc = apply_closure(ctx, op, c.closure, budget);
      if (!subobject_iso(cc.closure, c.closure))
        rep.violations.push_back("idempotence fails for subset " + mask_to_text(s, n) + " of a " +
                                 std::to_string(n) + "-point space");
      ++rep.checks;
      // the dense part, viewed as an embedding into the closure carrier
      ClosureResult dc = apply_closure(ctx, op, c.dense_part, budget);
      if (!dc.is_dense)
        rep.violations.push_back("weak hereditariness fails for subset " + mask_to_text(s, n) +
                                 " of a " + std::to_string(n) + "-point space");
    }
  }
  return rep;
}

bool absolutely_closed(const Subcategory& ctx, const FinSpace& b, int bound,
                       const Budget& budget) {
  if (!ctx.member(b)) fail(Errc::not_in_subcategory, "space outside " + ctx.name());
  auto ambient = [&](const FinSpace& s) { return ctx.ambient_member(s); };
  for (const FinSpace& y : member_reps(ambient, bound))
    for (const CMap& m : hom_set(b, y, budget)) {
      if (!is_embedding(m)) continue;
      if (!orthogonal_closure(ctx, m, budget).is_closed) return false;
    }
  return true;
}

ClosureComparison compare_closures(const Subcategory& ctx, const CMap& m, int stability_bound,
                                   const Budget& budget) {
  if (!is_embedding(m)) fail(Errc::not_an_embedding, "closure comparison is defined for embeddings");
  ClosureComparison out;
  out.stability = pushout_stability(ctx, m, stability_bound, budget);
  out.reg = regular_closure(ctx, m, budget);
  out.ort = orthogonal_closure(ctx, m, budget);
  out.agree = subobject_iso(out.reg.closure, out.ort.closure);
  out.ort_leq_reg = subobject_leq(out.ort.closure, out.reg.closure);
  return out;
}

}  // namespace fintop
