#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "opsplit/averaging.hpp"
#include "opsplit/bialgebra.hpp"
#include "opsplit/cli.hpp"
#include "opsplit/error.hpp"
#include "opsplit/leibniz.hpp"
#include "opsplit/scalar.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit::cli {

namespace {

struct Options {
  std::string kind;
  std::string file;
  std::string output;
  std::string format = "text";
  std::string preset = "leibniz";
  std::string mult, succ, prec, form, map, map_q, comult, vartheta, theta;
  std::string type;
  std::string rep = "adjoint";
  std::string route;
  bool dual = false;
  bool strong = false;
  bool sdpl = false;
  std::string demo;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::DuplicateEntry:
    case ErrorCode::Usage:
    case ErrorCode::UnknownMult:
    case ErrorCode::DimMismatch:
    case ErrorCode::BadShape:
      return true;
    default:
      return false;
  }
}

template <typename Map>
const typename Map::mapped_type& pick(const Map& m, const std::string& given, std::initializer_list<const char*> fallbacks,
                                      const std::string& flag) {
  if (!given.empty()) {
    const auto it = m.find(given);
    if (it == m.end()) throw Error(ErrorCode::Usage, "no entry named '" + given + "' for --" + flag);
    return it->second;
  }
  for (const char* f : fallbacks)
    if (m.count(f)) return m.at(f);
  if (m.size() == 1) return m.begin()->second;
  throw Error(ErrorCode::Usage, "ambiguous or missing input; pass --" + flag);
}

const RelationSet& preset_of(const Options& o) {
  if (o.preset == "leibniz") return leibniz_relations();
  if (o.preset == "lie") return lie_relations();
  throw Error(ErrorCode::Usage, "unknown preset '" + o.preset + "'");
}

TypeMatrix type_of(const std::string& text) {
  if (text.empty() || text == "I" || text == "identity") return TypeMatrix::identity();
  if (text == "L") return type_L();
  if (text == "a") return type_a();
  if (text == "b") return type_b();
  std::vector<Scalar> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_scalar(part));
  if (v.size() != 4) throw Error(ErrorCode::Usage, "--type needs I, L, a, b or four values a1,b1,a2,b2");
  return TypeMatrix{v[0], v[1], v[2], v[3]};
}

const Tensor3& mult_of(const AlgebraFile& f, const Options& o) {
  return pick(f.mults, o.mult, {"bracket", "circ"}, "mult");
}

SplitAlgebra split_of(const AlgebraFile& f, const Options& o) {
  return SplitAlgebra(pick(f.mults, o.succ.empty() ? "succ" : o.succ, {}, "succ"),
                      pick(f.mults, o.prec.empty() ? "prec" : o.prec, {}, "prec"));
}

const Matrix& map_p(const AlgebraFile& f, const Options& o) { return pick(f.maps, o.map, {"P", "T", "R"}, "map"); }
const Matrix& map_q(const AlgebraFile& f, const Options& o) { return pick(f.maps, o.map_q.empty() ? "Q" : o.map_q, {}, "map-q"); }
BilinearForm form_of(const AlgebraFile& f, const Options& o) { return BilinearForm{pick(f.forms, o.form, {"B"}, "form")}; }
const Comult& delta_of(const AlgebraFile& f, const Options& o) { return pick(f.comults, o.comult, {"delta"}, "comult"); }
const Comult& vartheta_of(const AlgebraFile& f, const Options& o) {
  return pick(f.comults, o.vartheta.empty() ? "vartheta" : o.vartheta, {}, "vartheta");
}
const Comult& theta_of(const AlgebraFile& f, const Options& o) {
  return pick(f.comults, o.theta.empty() ? "theta" : o.theta, {}, "theta");
}

Rep rep_of(const Tensor3& t, const Options& o) {
  if (o.rep == "adjoint") return adjoint_rep(t);
  if (o.rep == "coadjoint")
    return o.preset == "leibniz" ? dualize_leibniz_rep(adjoint_rep(t)) : dual_rep(adjoint_rep(t));
  if (o.rep == "zero") return zero_rep(t.d0(), t.d0());
  throw Error(ErrorCode::Usage, "unknown --rep '" + o.rep + "'");
}

AvgLieBialgebra avg_bialgebra_of(const AlgebraFile& f, const Options& o) {
  return AvgLieBialgebra{mult_of(f, o), delta_of(f, o), map_p(f, o), map_q(f, o)};
}

TypeARoute route_of(const std::string& r) {
  if (r == "type-a") return TypeARoute::TypeA;
  if (r == "dual-type-b") return TypeARoute::DualTypeB;
  if (r == "identities") return TypeARoute::Identities;
  throw Error(ErrorCode::Usage, "unknown --route '" + r + "'");
}

Report run_check(const AlgebraFile& f, const Options& o) {
  const std::string& k = o.kind;
  if (k == "relations") return check_relations(mult_of(f, o), preset_of(o));
  if (k == "rep") return is_representation(mult_of(f, o), preset_of(o), rep_of(mult_of(f, o), o));
  if (k == "type-m-pre") return check_type_m_pre(split_of(f, o), preset_of(o), type_of(o.type), o.dual);
  if (k == "o-operator") {
    const Tensor3& t = mult_of(f, o);
    const Rep r = rep_of(t, o);
    if (o.strong) return check_strong(t, preset_of(o), r.left, r.right, map_p(f, o));
    if (!o.type.empty()) return classify_o_operator(t, preset_of(o), r.left, r.right, map_p(f, o), type_of(o.type), o.dual);
    return check_o_operator(t, r.left, r.right, map_p(f, o));
  }
  if (k == "rota-baxter") return check_type_m_rota_baxter(mult_of(f, o), map_p(f, o), type_of(o.type), o.strong, preset_of(o));
  if (k == "invariance") return check_type_m_invariance(mult_of(f, o), form_of(f, o), type_of(o.type));
  if (k == "sdpl") return o.route.empty() ? check_sdpl(split_of(f, o)) : check_type_a(split_of(f, o), route_of(o.route));
  if (k == "averaging") return check_averaging(mult_of(f, o), map_p(f, o));
  if (k == "admissible") return check_admissible(mult_of(f, o), map_p(f, o), map_q(f, o));
  if (k == "coalgebra") {
    const bool split = !o.vartheta.empty() || (f.comults.count("vartheta") && f.comults.count("theta"));
    if (split) return check_sdpl_coalgebra(vartheta_of(f, o), theta_of(f, o));
    return check_leibniz_coalgebra(delta_of(f, o));
  }
  if (k == "bialgebra") return check_sdpl_bialgebra(SDPLAlgebra(split_of(f, o)), vartheta_of(f, o), theta_of(f, o));
  if (k == "manin") {
    if (o.sdpl) return check_manin_triple(split_of(f, o), ManinKind::SdplQuadratic);
    return check_manin_triple(mult_of(f, o));
  }
  if (k == "avg-bialgebra") return check_avg_lie_bialgebra(avg_bialgebra_of(f, o));
  throw Error(ErrorCode::Usage, "unknown check kind '" + k + "'");
}

AlgebraFile with_mults(const AlgebraFile& src, std::size_t dim, std::map<std::string, Tensor3> mults) {
  AlgebraFile out;
  out.dim = dim;
  if (dim == src.dim) out.basis = src.basis;
  out.mults = std::move(mults);
  return out;
}

AlgebraFile run_construct(const AlgebraFile& f, const Options& o) {
  const std::string& k = o.kind;
  if (k == "split-from-form") {
    const SplitAlgebra s = splitting_from_form(mult_of(f, o), preset_of(o), form_of(f, o), type_of(o.type));
    return with_mults(f, f.dim, {{"succ", s.succ()}, {"prec", s.prec()}});
  }
  if (k == "split-from-operator") {
    const Tensor3& t = mult_of(f, o);
    const Rep r = rep_of(t, o);
    const SplitAlgebra s = induce_splitting(t, r.left, r.right, map_p(f, o));
    return with_mults(f, f.dim, {{"succ", s.succ()}, {"prec", s.prec()}});
  }
  if (k == "sdpl-from-admissible") {
    const SDPLAlgebra s = sdpl_from_admissible(mult_of(f, o), map_p(f, o), map_q(f, o));
    return with_mults(f, f.dim, {{"succ", s.succ()}, {"prec", s.prec()}});
  }
  if (k == "induce-bialgebra") {
    const SDPLBialgebra b = induce_sdpl_bialgebra(avg_bialgebra_of(f, o));
    AlgebraFile out = with_mults(f, f.dim, {{"succ", b.sdpl().succ()}, {"prec", b.sdpl().prec()}});
    out.comults = {{"vartheta", b.vartheta()}, {"theta", b.theta()}};
    return out;
  }
  if (k == "endo-double") {
    const AveragingLieAlgebra a = endo_double(mult_of(f, o));
    AlgebraFile out = with_mults(f, a.bracket.d0(), {{"bracket", a.bracket}});
    out.maps["P"] = a.p;
    if (a.q) out.maps["Q"] = *a.q;
    return out;
  }
  if (k == "leibniz-from-averaging") {
    const Tensor3& br = mult_of(f, o);
    const Matrix& p = map_p(f, o);
    const Report r = check_averaging(br, p);
    if (!r.ok) throw Error(ErrorCode::NotAveraging, "P does not satisfy the averaging identity");
    return with_mults(f, f.dim, {{"circ", induced_leibniz(br, p)}});
  }
  throw Error(ErrorCode::Usage, "unknown construct kind '" + k + "'");
}

AlgebraFile run_double(const AlgebraFile& f, const Options& o) {
  const std::string& k = o.kind;
  const std::size_t n = f.dim;
  std::map<std::string, Tensor3> mults;
  if (k == "leibniz" || k == "sdpl") {
    const SplitAlgebra a = split_of(f, o);
    const SplitAlgebra astar(dualize_comult(vartheta_of(f, o)), dualize_comult(theta_of(f, o)));
    if (k == "leibniz") {
      mults["circ"] = build_leibniz_double(a, astar);
    } else {
      const SplitAlgebra d = build_sdpl_double(a, astar);
      mults["succ"] = d.succ();
      mults["prec"] = d.prec();
    }
  } else if (k == "lie") {
    mults["bracket"] = lie_double(mult_of(f, o), dualize_comult(delta_of(f, o)));
  } else if (k == "avg") {
    const ManinDoubles d = avg_manin_to_leibniz_manin(avg_bialgebra_of(f, o));
    mults["circ"] = d.circ;
    mults["succ"] = d.split.succ();
    mults["prec"] = d.split.prec();
  } else {
    throw Error(ErrorCode::Usage, "unknown double kind '" + k + "'");
  }
  AlgebraFile out = with_mults(f, 2 * n, std::move(mults));
  if (!f.basis.empty()) {
    out.basis = f.basis;
    for (const std::string& l : f.basis) out.basis.push_back(l + "*");
  }
  out.forms["pairing"] = pairing_form(n).m;
  return out;
}

void emit_file(const AlgebraFile& f, const Options& o, std::ostream& out) {
  if (o.output.empty() || o.output == "-")
    out << serialize_algebra_file(f);
  else
    write_algebra_file(f, o.output);
}

void apply_cap_from_env() {
  const char* env = std::getenv("OPSPLIT_VIOLATION_CAP");
  if (!env || !*env) {
    set_violation_cap(100);
    return;
  }
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v <= 0) throw Error(ErrorCode::Usage, "OPSPLIT_VIOLATION_CAP must be a positive integer");
  set_violation_cap(static_cast<std::size_t>(v));
}

void add_input_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "relation set: leibniz or lie")->check(CLI::IsMember({"leibniz", "lie"}));
  cmd->add_option("--mult", o.mult, "multiplication name");
  cmd->add_option("--succ", o.succ, "succ multiplication name (default succ)");
  cmd->add_option("--prec", o.prec, "prec multiplication name (default prec)");
  cmd->add_option("--form", o.form, "bilinear form name");
  cmd->add_option("--map", o.map, "operator name (P, T or R)");
  cmd->add_option("--map-q", o.map_q, "second operator name (default Q)");
  cmd->add_option("--comult", o.comult, "comultiplication name");
  cmd->add_option("--vartheta", o.vartheta, "first comultiplication of a split coalgebra");
  cmd->add_option("--theta", o.theta, "second comultiplication of a split coalgebra");
  cmd->add_option("--type", o.type, "type matrix: I, L, a, b or a1,b1,a2,b2");
  cmd->add_option("--rep", o.rep, "actions: adjoint, coadjoint or zero");
  cmd->add_option("file", o.file, "algebra file")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"opsplit: exact checks and constructions for split algebras"};
  app.require_subcommand(1, 1);

  CLI::App* check = app.add_subcommand("check", "verify a structure on an algebra file");
  check->add_option("--kind", o.kind, "what to check")
      ->required()
      ->check(CLI::IsMember({"relations", "rep", "type-m-pre", "o-operator", "rota-baxter", "invariance", "sdpl",
                             "averaging", "admissible", "coalgebra", "bialgebra", "manin", "avg-bialgebra"}));
  check->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--dual", o.dual, "dual type-M variant");
  check->add_flag("--strong", o.strong, "also require the induced source product to satisfy the relations");
  check->add_flag("--sdpl", o.sdpl, "manin: judge the split double instead of its sum");
  check->add_option("--route", o.route, "sdpl: check the type-a condition by one route")
      ->check(CLI::IsMember({"type-a", "dual-type-b", "identities"}));
  add_input_flags(check, o);

  CLI::App* construct = app.add_subcommand("construct", "build a new structure and write an algebra file");
  construct->add_option("--kind", o.kind, "what to build")
      ->required()
      ->check(CLI::IsMember({"split-from-form", "split-from-operator", "sdpl-from-admissible", "induce-bialgebra",
                             "endo-double", "leibniz-from-averaging"}));
  construct->add_option("-o,--output", o.output, "output path (default stdout)");
  add_input_flags(construct, o);

  CLI::App* dbl = app.add_subcommand("double", "build a double on A + A* and write an algebra file");
  dbl->add_option("--kind", o.kind, "leibniz, sdpl, lie or avg")
      ->required()
      ->check(CLI::IsMember({"leibniz", "sdpl", "lie", "avg"}));
  dbl->add_option("-o,--output", o.output, "output path (default stdout)");
  add_input_flags(dbl, o);

  CLI::App* demo = app.add_subcommand("demo", "run a bundled pipeline against golden tables");
  demo->add_option("name", o.demo, "pipeline name")->required()->check(CLI::IsMember({"sl2"}));

  std::vector<std::string> argv_store = args;
  argv_store.insert(argv_store.begin(), "opsplit");
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    apply_cap_from_env();
    if (demo->parsed()) {
      const DemoResult r = run_demo_sl2();
      for (const std::string& l : r.lines) out << l << "\n";
      out << (r.ok ? "demo sl2: all golden diffs empty" : "demo sl2: FAILED") << "\n";
      return r.ok ? 0 : 1;
    }
    const AlgebraFile f = read_algebra_file(o.file);
    if (check->parsed()) {
      CheckReport cr{o.kind, {}, 0};
      const auto start = std::chrono::steady_clock::now();
      try {
        cr.report = run_check(f, o);
      } catch (const Error& e) {
        if (is_input_error(e.code())) throw;
        cr.report.ok = false;
        cr.report.total = 1;
        cr.report.violations.push_back({"precondition " + std::string(error_name(e.code())), {}, Vec()});
      }
      cr.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << emit_report(cr, o.format == "json" ? ReportFormat::Json : ReportFormat::Text);
      return cr.report.ok ? 0 : 1;
    }
    emit_file(construct->parsed() ? run_construct(f, o) : run_double(f, o), o, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  }
}

}  // namespace opsplit::cli
