// Batch front end for the workbench: validates structure-constant files and
// runs the library operations over named declarations, printing results in
// the same file format so they can be fed back in. Exit codes: 0 success,
// 1 mathematical failure, 2 usage or parse failure.

#include "wb/adjlift.hpp"
#include "wb/comodcat.hpp"
#include "wb/dgchain.hpp"
#include "wb/hopf.hpp"
#include "wb/oplaxfun.hpp"
#include "wb/sampling.hpp"
#include "wb/structures.hpp"
#include "wb/wbfile.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace wb;

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Declaration& need(const WorkbenchFile& file, const std::string& name) {
  const Declaration* d = file.find(name);
  if (!d) throw UsageError("unknown name '" + name + "'");
  return *d;
}

std::string kind_of(const Declaration& d) {
  switch (d.value.index()) {
    case 0: return "coalgebra";
    case 1: return "algebra";
    case 2: return "bialgebra";
    case 3: return "comodule";
    case 4: return "oplax";
    case 5: return "adjunction";
    case 6: return "complex";
    default: return "dgcomodule";
  }
}

Report validate_declaration(const Declaration& d) {
  if (const auto* c = std::get_if<FinCoalgebra>(&d.value)) return validate_coalgebra(*c);
  if (const auto* a = std::get_if<FinAlgebra>(&d.value)) return validate_algebra(*a);
  if (const auto* h = std::get_if<FinBialgebra>(&d.value)) return validate_bialgebra(*h);
  if (const auto* v = std::get_if<ComoduleDecl>(&d.value)) return validate_comodule(v->value);
  if (const auto* s = std::get_if<OplaxDecl>(&d.value)) return validate_oplax(s->value);
  if (const auto* adj = std::get_if<AdjunctionData>(&d.value)) return validate_adjunction(*adj);
  if (const auto* x = std::get_if<ChainComplex>(&d.value)) return validate_complex(*x);
  return validate_dg_comodule(std::get<DgComoduleDecl>(d.value).value);
}

void print_report(const Report& report, const std::string& indent) {
  for (const ReportEntry& e : report.failures)
    std::cout << indent << e.law << " residual_norm=" << e.residual.abs_sum() << "\n";
  for (const std::string& n : report.notes) std::cout << indent << "note: " << n << "\n";
}

int cmd_validate(const std::string& path) {
  const WorkbenchFile file = parse_workbench_file(path);
  bool all_ok = true;
  for (const Declaration& d : file.decls) {
    const Report report = validate_declaration(d);
    std::cout << kind_of(d) << " " << d.name << ": " << (report.ok() ? "ok" : "FAIL") << "\n";
    print_report(report, "  ");
    all_ok = all_ok && report.ok();
  }
  std::cout << "validated " << file.decls.size() << " declaration"
            << (file.decls.size() == 1 ? "" : "s") << "\n";
  return all_ok ? kExitOk : kExitMath;
}

int cmd_report(const std::string& path) {
  const WorkbenchFile file = parse_workbench_file(path);
  size_t failing = 0;
  for (const Declaration& d : file.decls) {
    const Report report = validate_declaration(d);
    if (!report.ok()) ++failing;
    std::cout << kind_of(d) << " " << d.name << " status=" << (report.ok() ? "ok" : "fail");
    if (const auto* c = std::get_if<FinCoalgebra>(&d.value))
      std::cout << " dim=" << c->space.dim;
    else if (const auto* a = std::get_if<FinAlgebra>(&d.value))
      std::cout << " dim=" << a->space.dim;
    else if (const auto* h = std::get_if<FinBialgebra>(&d.value))
      std::cout << " dim=" << h->dim();
    else if (const auto* v = std::get_if<ComoduleDecl>(&d.value))
      std::cout << " dim=" << v->value.space.dim << " over=" << v->over;
    else if (const auto* s = std::get_if<OplaxDecl>(&d.value))
      std::cout << " carrier=" << s->value.carrier.dim << " from=" << s->from
                << " to=" << s->to;
    else if (const auto* adj = std::get_if<AdjunctionData>(&d.value))
      std::cout << " dim=" << adj->left.dim;
    else if (const auto* x = std::get_if<ChainComplex>(&d.value))
      std::cout << " degrees=[" << x->min_deg << "," << x->max_deg << "]"
                << " total_dim=" << x->total_dim();
    else if (const auto* dg = std::get_if<DgComoduleDecl>(&d.value))
      std::cout << " degrees=[" << dg->value.complex.min_deg << ","
                << dg->value.complex.max_deg << "]"
                << " total_dim=" << dg->value.complex.total_dim() << " over=" << dg->over;
    std::cout << "\n";
  }
  std::cout << "summary: " << file.decls.size() << " declarations, " << failing
            << " failing\n";
  return failing == 0 ? kExitOk : kExitMath;
}

struct ComoduleOperand {
  std::string over_name;
  FinBialgebra h;
  Comodule v;
};

ComoduleOperand comodule_over_bialgebra(const WorkbenchFile& file, const std::string& name) {
  const Declaration& d = need(file, name);
  const auto* cd = std::get_if<ComoduleDecl>(&d.value);
  if (!cd) throw UsageError("'" + name + "' is not a comodule");
  const Declaration& over = need(file, cd->over);
  const auto* h = std::get_if<FinBialgebra>(&over.value);
  if (!h) throw UsageError("comodule '" + name + "' must be declared over a bialgebra");
  return {cd->over, *h, cd->value};
}

const OplaxDecl& oplax_operand(const WorkbenchFile& file, const std::string& name) {
  const Declaration& d = need(file, name);
  const auto* s = std::get_if<OplaxDecl>(&d.value);
  if (!s) throw UsageError("'" + name + "' is not an oplax structure");
  return *s;
}

const AdjunctionData& adjunction_operand(const WorkbenchFile& file, const std::string& name) {
  const Declaration& d = need(file, name);
  const auto* a = std::get_if<AdjunctionData>(&d.value);
  if (!a) throw UsageError("'" + name + "' is not an adjunction");
  return *a;
}

// Prints one certification line and folds the verdict into ok.
void certify(const std::string& what, const Report& report, bool& ok) {
  std::cout << "check " << what << ": " << (report.ok() ? "pass" : "FAIL") << "\n";
  print_report(report, "  ");
  ok = ok && report.ok();
}

int cmd_compute(const std::string& path, const std::string& verb,
                const std::vector<std::string>& args) {
  const WorkbenchFile file = parse_workbench_file(path);
  Rng rng(seed_from_env());
  bool ok = true;

  const auto want_args = [&](size_t count, const std::string& usage) {
    if (args.size() != count) throw UsageError("verb '" + verb + "' expects " + usage);
  };

  if (verb == "tensor") {
    want_args(2, "two comodule names");
    const ComoduleOperand a = comodule_over_bialgebra(file, args[0]);
    const ComoduleOperand b = comodule_over_bialgebra(file, args[1]);
    if (a.over_name != b.over_name)
      throw UsageError("tensor operands must live over the same bialgebra");
    const Comodule result = comodule_tensor(a.h, a.v, b.v);
    std::cout << serialize(Declaration{"result", ComoduleDecl{a.over_name, result}});
    certify("tensor coaction is a comodule", validate_comodule(result), ok);
  } else if (verb == "hom") {
    want_args(2, "comodule names Z V");
    const ComoduleOperand z = comodule_over_bialgebra(file, args[0]);
    const ComoduleOperand v = comodule_over_bialgebra(file, args[1]);
    if (z.over_name != v.over_name)
      throw UsageError("hom operands must live over the same bialgebra");
    const MappingComodule m = mapping_comodule(z.h, z.v, v.v);
    std::cout << serialize(Declaration{"result", ComoduleDecl{z.over_name, m.object}});
    certify("mapping comodule is a comodule", validate_comodule(m.object), ok);
    certify("tensor-hom adjunction on 3 sampled comodules",
            certify_mapping_adjunction(z.h, z.v, v.v, m, rng, 3), ok);
  } else if (verb == "enriched") {
    want_args(2, "comodule names W Z");
    const ComoduleOperand w = comodule_over_bialgebra(file, args[0]);
    const ComoduleOperand z = comodule_over_bialgebra(file, args[1]);
    if (w.over_name != z.over_name)
      throw UsageError("enriched operands must live over the same bialgebra");
    const MappingComodule e = enriched_hom(w.h, w.v, z.v);
    std::cout << serialize(Declaration{"result", ComoduleDecl{w.over_name, e.object}});
    certify("enriched hom is a comodule", validate_comodule(e.object), ok);
    const RightAdjointResult r{e.object, e.inclusion};
    certify("lifted adjunction on 3 sampled comodules",
            certify_right_adjoint(standard_adjunction(w.v.space.dim),
                                  comodule_tensor_oplax(w.h, w.v), z.v, r, rng, 3),
            ok);
  } else if (verb == "conv") {
    want_args(2, "a coalgebra name and an algebra name");
    const Declaration& cd = need(file, args[0]);
    const FinCoalgebra* c = nullptr;
    if (const auto* cc = std::get_if<FinCoalgebra>(&cd.value)) c = cc;
    if (const auto* hb = std::get_if<FinBialgebra>(&cd.value)) c = &hb->coalgebra;
    if (!c) throw UsageError("'" + args[0] + "' is not a coalgebra or bialgebra");
    const Declaration& ad = need(file, args[1]);
    const FinAlgebra* a = nullptr;
    if (const auto* aa = std::get_if<FinAlgebra>(&ad.value)) a = aa;
    if (const auto* hb = std::get_if<FinBialgebra>(&ad.value)) a = &hb->algebra;
    if (!a) throw UsageError("'" + args[1] + "' is not an algebra or bialgebra");
    const ConvolutionAlgebra conv = convolution_algebra(*c, *a);
    std::cout << serialize(Declaration{"result", conv.result});
    certify("convolution algebra axioms", validate_algebra(conv.result), ok);
  } else if (verb == "kelly") {
    want_args(3, "'roundtrip' plus adjunction and oplax names");
    if (args[0] != "roundtrip") throw UsageError("unknown kelly mode '" + args[0] + "'");
    const AdjunctionData& adj = adjunction_operand(file, args[1]);
    const OplaxDecl& s = oplax_operand(file, args[2]);
    const LaxStructure lax = kelly_oplax_to_lax(adj, s.value);
    const OplaxStructure back = kelly_lax_to_oplax(adj, lax);
    const bool identity = back.b == s.value.b;
    std::cout << "identity: " << (identity ? "yes" : "no") << "\n";
    ok = ok && identity;
    certify("transposed lax structure axioms", validate_lax(lax), ok);
  } else if (verb == "lift") {
    want_args(2, "an oplax name and a comodule name");
    const OplaxDecl& s = oplax_operand(file, args[0]);
    const Declaration& vd = need(file, args[1]);
    const auto* cd = std::get_if<ComoduleDecl>(&vd.value);
    if (!cd) throw UsageError("'" + args[1] + "' is not a comodule");
    if (cd->over != s.from)
      throw UsageError("comodule must live over the oplax source '" + s.from + "'");
    const Comodule lifted = lift_comodule(s.value, cd->value);
    std::cout << serialize(Declaration{"result", ComoduleDecl{s.to, lifted}});
    certify("lifted coaction is a comodule", validate_comodule(lifted), ok);
  } else if (verb == "adjoint") {
    want_args(3, "adjunction, oplax, and comodule names");
    const AdjunctionData& adj = adjunction_operand(file, args[0]);
    const OplaxDecl& s = oplax_operand(file, args[1]);
    const Declaration& zd = need(file, args[2]);
    const auto* cd = std::get_if<ComoduleDecl>(&zd.value);
    if (!cd) throw UsageError("'" + args[2] + "' is not a comodule");
    if (cd->over != s.to)
      throw UsageError("comodule must live over the oplax target '" + s.to + "'");
    const RightAdjointResult r = lifted_right_adjoint(adj, s.value, cd->value);
    std::cout << serialize(Declaration{"result", ComoduleDecl{s.from, r.object}});
    certify("lifted right adjoint is a comodule", validate_comodule(r.object), ok);
    certify("adjoint bijection on 3 sampled comodules",
            certify_right_adjoint(adj, s.value, cd->value, r, rng, 3), ok);
  } else if (verb == "factor") {
    want_args(2, "an adjunction name and an oplax name");
    const AdjunctionData& adj = adjunction_operand(file, args[0]);
    const OplaxDecl& s = oplax_operand(file, args[1]);
    const FactorComonad fc = factor_comonad(adj, s.value);
    std::cout << serialize(Declaration{"middle", fc.middle});
    std::cout << serialize(Declaration{"through", OplaxDecl{s.from, "middle", fc.through}});
    std::cout << serialize(Declaration{"collapse", OplaxDecl{"middle", s.to, fc.collapse}});
    certify("factorization through the middle comonad", fc.report, ok);
  } else if (verb == "transfer") {
    want_args(2, "two dgcomodule names");
    const Declaration& zd = need(file, args[0]);
    const Declaration& vd = need(file, args[1]);
    const auto* zz = std::get_if<DgComoduleDecl>(&zd.value);
    const auto* vv = std::get_if<DgComoduleDecl>(&vd.value);
    if (!zz || !vv) throw UsageError("transfer operands must be dgcomodules");
    if (zz->over != vv->over)
      throw UsageError("transfer operands must live over the same bialgebra");
    const DgMappingComodule m = dg_mapping_comodule(zz->value.over, zz->value, vv->value);
    std::cout << serialize(Declaration{"result", DgComoduleDecl{zz->over, m.object}});
    certify("dg/graded transfer comparison",
            transfer_iso_check(zz->value.over, zz->value, vv->value), ok);
  } else {
    throw UsageError("unknown verb '" + verb + "'");
  }
  return ok ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for comonads, oplax morphisms, and adjoint liftings"};
  app.require_subcommand(1);

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "run every declared validator");
  validate->add_option("file", validate_file, "workbench file")->required();

  std::string report_file;
  CLI::App* report = app.add_subcommand("report", "one status line per declaration");
  report->add_option("file", report_file, "workbench file")->required();

  std::string compute_file, compute_verb;
  std::vector<std::string> compute_args;
  CLI::App* compute = app.add_subcommand("compute", "run an operation over declarations");
  compute->add_option("file", compute_file, "workbench file")->required();
  compute->add_option("verb", compute_verb,
                      "tensor | hom | enriched | conv | kelly | lift | adjoint | factor | "
                      "transfer")
      ->required();
  compute->add_option("args", compute_args, "operand names");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(validate_file);
    if (report->parsed()) return cmd_report(report_file);
    return cmd_compute(compute_file, compute_verb, compute_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wb::ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wb::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
}
