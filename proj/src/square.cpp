#include "exq/square.hpp"

namespace exq {

std::optional<Error> check_square(const LaxSquare& sq) {
  auto same = [](const Cat& a, const Cat& b) { return a.get() == b.get(); };
  if (!same(sq.p.source, sq.P) || !same(sq.q.source, sq.P) || !same(sq.p.target, sq.A) || !same(sq.q.target, sq.B) ||
      !same(sq.f.source, sq.A) || !same(sq.g.source, sq.B) || !same(sq.f.target, sq.C) || !same(sq.g.target, sq.C))
    return Error(ErrorKind::TargetMismatch, "square boundary does not typecheck");
  for (const auto* F : {&sq.p, &sq.q, &sq.f, &sq.g})
    if (auto e = check_functor(*F)) return e;
  const auto& P = *sq.P;
  const auto& C = *sq.C;
  if (static_cast<int>(sq.phi.comp.size()) != P.num_objects())
    return Error(ErrorKind::NaturalityViolation, "2-cell component count");
  for (int x = 0; x < P.num_objects(); ++x) {
    int c = sq.phi.comp[x];
    if (c < 0 || c >= C.num_arrows() || C.src(c) != sq.f.obj[sq.p.obj[x]] || C.tgt(c) != sq.g.obj[sq.q.obj[x]])
      return Error(ErrorKind::NaturalityViolation, "2-cell component at " + P.object(x));
  }
  for (int d = 0; d < P.num_arrows(); ++d) {
    int lhs = C.compose(sq.g.arr[sq.q.arr[d]], sq.phi.comp[P.src(d)]);
    int rhs = C.compose(sq.phi.comp[P.tgt(d)], sq.f.arr[sq.p.arr[d]]);
    if (lhs != rhs) return Error(ErrorKind::NaturalityViolation, "2-cell square at " + P.arrow_id(d));
  }
  return std::nullopt;
}

LaxSquare dual_square(const LaxSquare& sq) {
  LaxSquare d;
  d.P = make_cat(opposite(*sq.P));
  d.A = make_cat(opposite(*sq.B));
  d.B = make_cat(opposite(*sq.A));
  d.C = make_cat(opposite(*sq.C));
  d.p = opposite(sq.q, d.P, d.A);
  d.q = opposite(sq.p, d.P, d.B);
  d.f = opposite(sq.g, d.A, d.C);
  d.g = opposite(sq.f, d.B, d.C);
  d.phi = {compose(d.f, d.p), compose(d.g, d.q), sq.phi.comp};
  return d;
}

LaxSquare square_from(const CommaResult& r, const FinFunctor& f, const FinFunctor& g) {
  return LaxSquare{r.apex, f.source, g.source, f.target, r.proj_left, r.proj_right, f, g, r.two_cell};
}

LaxSquare comma_square(const FinFunctor& f, const FinFunctor& g) { return square_from(comma(f, g), f, g); }

LaxSquare pullback_square(const FinFunctor& f, const FinFunctor& g) { return square_from(pullback(f, g), f, g); }

LaxSquare iso_comma_square(const FinFunctor& f, const FinFunctor& g) { return square_from(iso_comma(f, g), f, g); }

LaxSquare identity_square(const Cat& c) {
  auto id = identity_functor(c);
  return LaxSquare{c, c, c, c, id, id, id, id, identity_nat(id)};
}

LaxSquare commuting_square(const FinFunctor& p, const FinFunctor& q, const FinFunctor& f, const FinFunctor& g) {
  auto fp = compose(f, p);
  auto gq = compose(g, q);
  if (fp.obj != gq.obj || fp.arr != gq.arr) throw Error(ErrorKind::NaturalityViolation, "square does not commute");
  NatTransform phi = identity_nat(fp);
  phi.to = gq;
  return LaxSquare{p.source, p.target, q.target, f.target, p, q, f, g, phi};
}

LaxSquare transpose_square(const LaxSquare& sq) {
  return LaxSquare{sq.P, sq.B, sq.A, sq.C, sq.q, sq.p, sq.g, sq.f, {sq.phi.to, sq.phi.from, sq.phi.comp}};
}

LaxSquare precompose_apex(const LaxSquare& sq, const FinFunctor& e) {
  LaxSquare r = sq;
  r.P = e.source;
  r.p = compose(sq.p, e);
  r.q = compose(sq.q, e);
  r.phi = whisker_right(sq.phi, e);
  return r;
}

}  // namespace exq
