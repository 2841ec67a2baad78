#include <functional>

#include "embedded_data.hpp"
#include "opsplit/averaging.hpp"
#include "opsplit/bialgebra.hpp"
#include "opsplit/cli.hpp"
#include "opsplit/error.hpp"
#include "opsplit/leibniz.hpp"
#include "opsplit/scalar.hpp"

namespace opsplit::cli {

std::string embedded_sl2_input() { return kSl2Input; }
std::string embedded_sl2_golden() { return kSl2Golden; }

namespace {

// 4x - 4h style rendering against the basis labels.
std::string combination(const Vec& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    const Scalar mag = neg ? Scalar(-v[i]) : v[i];
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != 1) s += format_scalar(mag);
    s += labels[i];
  }
  return s.empty() ? "0" : s;
}

class Stages {
 public:
  explicit Stages(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  void verdict(const std::string& name, bool ok, const std::vector<std::string>& detail = {}) {
    result_.lines.push_back(std::string(ok ? "[ok]   " : "[FAIL] ") + name);
    for (const std::string& d : detail) result_.lines.push_back("         " + d);
    result_.ok = result_.ok && ok;
  }

  void report(const std::string& name, const Report& r) {
    std::vector<std::string> detail;
    for (const Violation& v : r.violations) detail.push_back(v.identity);
    verdict(name, r.ok, detail);
  }

  void diff(const std::string& name, const std::string& op, const Tensor3& got, const Tensor3& want) {
    std::vector<std::string> detail;
    for (std::size_t i = 0; i < want.d0(); ++i)
      for (std::size_t j = 0; j < want.d1(); ++j) {
        const Vec g = got.fiber(i, j), w = want.fiber(i, j);
        if (g == w) continue;
        detail.push_back(labels_[i] + " " + op + " " + labels_[j] + ": got " + combination(g, labels_) +
                         ", expected " + combination(w, labels_));
      }
    verdict(name, detail.empty(), detail);
  }

  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      verdict(name, false, {e.what()});
    }
  }

  DemoResult result() const { return result_; }

 private:
  std::vector<std::string> labels_;
  DemoResult result_;
};

}  // namespace

DemoResult run_demo_sl2() {
  const AlgebraFile in = parse_algebra_file(kSl2Input);
  const AlgebraFile golden = parse_algebra_file(kSl2Golden);
  const Tensor3& bracket = in.mults.at("bracket");
  const Matrix& p = in.maps.at("P");
  const BilinearForm b{in.forms.at("B")};
  Stages st(in.basis);

  st.report("bracket satisfies the Lie relations", check_relations(bracket, lie_relations()));
  st.report("P satisfies the averaging identity", check_averaging(bracket, p));
  const Tensor3 circ = induced_leibniz(bracket, p);
  st.diff("induced Leibniz table", "o", circ, golden.mults.at("circ"));
  st.report("induced product satisfies the Leibniz relations", check_relations(circ, leibniz_relations()));
  st.verdict("B is symmetric and nondegenerate", b.symmetric() && b.nondegenerate());
  st.report("B is left-invariant on the induced algebra", check_left_invariant(circ, b));
  st.guarded("adjoint of P under B equals P", [&] { st.verdict("adjoint of P under B equals P", adjoint_map(p, b) == p); });

  st.guarded("SDPL table from the admissible pair (P, P)", [&] {
    const SDPLAlgebra s = sdpl_from_admissible(bracket, p, p);
    st.diff("succ table from the admissible pair (P, P)", ">", s.succ(), golden.mults.at("succ"));
    st.diff("prec table from the admissible pair (P, P)", "<", s.prec(), golden.mults.at("prec"));
  });
  st.guarded("SDPL table from the form B", [&] {
    const SDPLAlgebra s = sdpl_from_form(circ, b);
    st.diff("succ table from the form B", ">", s.succ(), golden.mults.at("succ"));
    st.diff("prec table from the form B", "<", s.prec(), golden.mults.at("prec"));
  });

  const SplitAlgebra table(golden.mults.at("succ"), golden.mults.at("prec"));
  st.report("golden table is SDPL", check_sdpl(table));
  st.report("type-a condition, direct route", check_type_a(table, TypeARoute::TypeA));
  st.report("type-a condition, dual type-b route", check_type_a(table, TypeARoute::DualTypeB));
  st.report("type-a condition, identity route", check_type_a(table, TypeARoute::Identities));

  st.guarded("Manin chain for the trivial cobracket", [&] {
    const SDPLBialgebra bi = induce_sdpl_bialgebra({bracket, zero_comult(in.dim), p, p});
    const ManinChain c = evaluate_manin_chain(bi.sdpl().split(), bi.dual_sdpl().split());
    st.verdict("Manin chain for the trivial cobracket",
               c.bialgebra && c.leibniz_manin && c.sdpl_manin && c.leibniz_double && c.sdpl_double);
  });
  return st.result();
}

}  // namespace opsplit::cli
