#include "wb/wbfile.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace wb {

namespace {

Scalar parse_rational(const std::string& tok, int line) {
  try {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return Scalar(boost::multiprecision::cpp_int(tok));
    const std::string num = tok.substr(0, slash);
    const std::string den = tok.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::runtime_error("empty part");
    const boost::multiprecision::cpp_int n(num);
    const boost::multiprecision::cpp_int d(den);
    if (d == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
    return Scalar(n) / Scalar(d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed rational '" + tok + "'");
  }
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed integer '" + tok + "'");
  }
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

// A declaration being assembled: header data plus named matrices whose
// shapes were fixed when their section line was seen.
struct Builder {
  std::string kind;
  std::string name;
  int dim = 0;
  int carrier = 0;
  int min_deg = 0;
  int max_deg = -1;
  std::string over, from, to;
  FinCoalgebra from_coalgebra, to_coalgebra, over_coalgebra;
  FinBialgebra over_bialgebra;
  std::vector<int> degree_dims;
  bool have_dims = false;
  std::map<std::string, LinMap> mats;
  LinMap* current = nullptr;
  int header_line = 0;

  int dim_at(int n) const {
    if (n < min_deg || n > max_deg) return 0;
    return degree_dims[static_cast<size_t>(n - min_deg)];
  }

  LinMap& open(const std::string& key, int rows, int cols, int line) {
    if (mats.count(key)) throw ParseError(line, "duplicate section '" + key + "'");
    auto [it, inserted] = mats.emplace(key, LinMap::zero(rows, cols));
    current = &it->second;
    return it->second;
  }

  LinMap take(const std::string& key, int rows, int cols) const {
    const auto it = mats.find(key);
    if (it == mats.end()) return LinMap::zero(rows, cols);
    return it->second;
  }
};

const FinCoalgebra* coalgebra_of(const Declaration& d) {
  if (const auto* c = std::get_if<FinCoalgebra>(&d.value)) return c;
  if (const auto* b = std::get_if<FinBialgebra>(&d.value)) return &b->coalgebra;
  return nullptr;
}

FinCoalgebra resolve_coalgebra(const WorkbenchFile& file, const std::string& ref, int line) {
  const Declaration* d = file.find(ref);
  if (!d) throw ParseError(line, "undeclared name '" + ref + "'");
  const FinCoalgebra* c = coalgebra_of(*d);
  if (!c) throw ParseError(line, "'" + ref + "' is not a coalgebra or bialgebra");
  return *c;
}

FinBialgebra resolve_bialgebra(const WorkbenchFile& file, const std::string& ref, int line) {
  const Declaration* d = file.find(ref);
  if (!d) throw ParseError(line, "undeclared name '" + ref + "'");
  const FinBialgebra* b = std::get_if<FinBialgebra>(&d->value);
  if (!b) throw ParseError(line, "'" + ref + "' is not a bialgebra");
  return *b;
}

Declaration finish(Builder& b, int line) {
  Declaration out;
  out.name = b.name;
  if (b.kind == "coalgebra") {
    out.value = FinCoalgebra{Space{b.dim}, b.take("comult", b.dim * b.dim, b.dim),
                             b.take("counit", 1, b.dim)};
  } else if (b.kind == "algebra") {
    out.value =
        FinAlgebra{Space{b.dim}, b.take("mult", b.dim, b.dim * b.dim), b.take("unit", b.dim, 1)};
  } else if (b.kind == "bialgebra") {
    out.value = FinBialgebra{
        {Space{b.dim}, b.take("comult", b.dim * b.dim, b.dim), b.take("counit", 1, b.dim)},
        {Space{b.dim}, b.take("mult", b.dim, b.dim * b.dim), b.take("unit", b.dim, 1)}};
  } else if (b.kind == "comodule") {
    const int dc = b.over_coalgebra.space.dim;
    out.value = ComoduleDecl{
        b.over, {b.over_coalgebra, Space{b.dim}, b.take("coaction", b.dim * dc, b.dim)}};
  } else if (b.kind == "oplax") {
    const int ds = b.from_coalgebra.space.dim;
    const int dt = b.to_coalgebra.space.dim;
    out.value = OplaxDecl{b.from, b.to,
                          {b.from_coalgebra, b.to_coalgebra, Space{b.carrier},
                           b.take("b", b.carrier * dt, ds * b.carrier)}};
  } else if (b.kind == "adjunction") {
    out.value = AdjunctionData{Space{b.dim}, Space{b.dim}, b.take("unit", b.dim * b.dim, 1),
                               b.take("counit", 1, b.dim * b.dim)};
  } else if (b.kind == "complex") {
    if (!b.have_dims && b.max_deg >= b.min_deg)
      throw ParseError(line, "complex without a dims line");
    ChainComplex x;
    x.min_deg = b.min_deg;
    x.max_deg = b.max_deg;
    x.dims = b.degree_dims;
    for (int n = b.min_deg; n <= b.max_deg; ++n)
      x.diffs.push_back(b.take("d " + std::to_string(n), b.dim_at(n - 1), b.dim_at(n)));
    out.value = std::move(x);
  } else if (b.kind == "dgcomodule") {
    if (!b.have_dims && b.max_deg >= b.min_deg)
      throw ParseError(line, "dgcomodule without a dims line");
    DgComodule v;
    v.over = b.over_bialgebra;
    v.complex.min_deg = b.min_deg;
    v.complex.max_deg = b.max_deg;
    v.complex.dims = b.degree_dims;
    const int dh = v.over.dim();
    for (int n = b.min_deg; n <= b.max_deg; ++n) {
      v.complex.diffs.push_back(
          b.take("d " + std::to_string(n), b.dim_at(n - 1), b.dim_at(n)));
      v.coactions.push_back(
          b.take("coaction " + std::to_string(n), b.dim_at(n) * dh, b.dim_at(n)));
    }
    out.value = DgComoduleDecl{b.over, std::move(v)};
  } else {
    throw ParseError(line, "unknown declaration kind '" + b.kind + "'");
  }
  return out;
}

}  // namespace

const Declaration* WorkbenchFile::find(const std::string& name) const {
  for (const Declaration& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

WorkbenchFile parse_workbench(const std::string& text) {
  WorkbenchFile file;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool seen_format = false;
  Builder b;
  bool open = false;

  const auto expect_args = [&](const std::vector<std::string>& toks, size_t count) {
    if (toks.size() != count)
      throw ParseError(line_no, "expected " + std::to_string(count - 1) + " arguments after '" +
                                    toks[0] + "'");
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::vector<std::string> toks = tokenize(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& head = toks[0];

    if (head == "format") {
      expect_args(toks, 2);
      if (open || seen_format) throw ParseError(line_no, "misplaced format line");
      if (toks[1] != "1") throw ParseError(line_no, "unsupported format '" + toks[1] + "'");
      seen_format = true;
      continue;
    }

    if (!open) {
      b = Builder{};
      b.kind = head;
      b.header_line = line_no;
      if (head == "coalgebra" || head == "algebra" || head == "bialgebra" ||
          head == "adjunction") {
        expect_args(toks, 3);
        b.name = toks[1];
        b.dim = parse_int(toks[2], line_no);
      } else if (head == "comodule") {
        expect_args(toks, 5);
        if (toks[3] != "over") throw ParseError(line_no, "expected 'over' in comodule header");
        b.name = toks[1];
        b.dim = parse_int(toks[2], line_no);
        b.over = toks[4];
        b.over_coalgebra = resolve_coalgebra(file, b.over, line_no);
      } else if (head == "oplax") {
        expect_args(toks, 7);
        if (toks[3] != "from" || toks[5] != "to")
          throw ParseError(line_no, "expected 'from ... to ...' in oplax header");
        b.name = toks[1];
        b.carrier = parse_int(toks[2], line_no);
        b.from = toks[4];
        b.to = toks[6];
        b.from_coalgebra = resolve_coalgebra(file, b.from, line_no);
        b.to_coalgebra = resolve_coalgebra(file, b.to, line_no);
      } else if (head == "complex") {
        expect_args(toks, 4);
        b.name = toks[1];
        b.min_deg = parse_int(toks[2], line_no);
        b.max_deg = parse_int(toks[3], line_no);
      } else if (head == "dgcomodule") {
        expect_args(toks, 6);
        if (toks[4] != "over")
          throw ParseError(line_no, "expected 'over' in dgcomodule header");
        b.name = toks[1];
        b.min_deg = parse_int(toks[2], line_no);
        b.max_deg = parse_int(toks[3], line_no);
        b.over = toks[5];
        b.over_bialgebra = resolve_bialgebra(file, b.over, line_no);
      } else {
        throw ParseError(line_no, "unknown declaration kind '" + head + "'");
      }
      if (b.dim < 0 || b.carrier < 0) throw ParseError(line_no, "negative dimension");
      if (file.find(b.name)) throw ParseError(line_no, "duplicate name '" + b.name + "'");
      open = true;
      continue;
    }

    // Inside a declaration block.
    if (head == "end") {
      expect_args(toks, 1);
      file.decls.push_back(finish(b, line_no));
      open = false;
      continue;
    }
    if (head == "entry") {
      expect_args(toks, 4);
      if (!b.current) throw ParseError(line_no, "entry outside a matrix section");
      const int r = parse_int(toks[1], line_no);
      const int c = parse_int(toks[2], line_no);
      if (r < 0 || r >= b.current->rows() || c < 0 || c >= b.current->cols())
        throw ParseError(line_no, "entry (" + toks[1] + ", " + toks[2] + ") out of range for " +
                                      std::to_string(b.current->rows()) + " x " +
                                      std::to_string(b.current->cols()) + " matrix");
      b.current->at(r, c) = parse_rational(toks[3], line_no);
      continue;
    }
    if (head == "dims") {
      if (b.kind != "complex" && b.kind != "dgcomodule")
        throw ParseError(line_no, "dims line outside a complex");
      const int length = b.max_deg - b.min_deg + 1;
      if (static_cast<int>(toks.size()) - 1 != std::max(0, length))
        throw ParseError(line_no, "dims line must list one dimension per degree");
      for (size_t k = 1; k < toks.size(); ++k) {
        const int d = parse_int(toks[k], line_no);
        if (d < 0) throw ParseError(line_no, "negative dimension");
        b.degree_dims.push_back(d);
      }
      b.have_dims = true;
      b.current = nullptr;
      continue;
    }

    // Matrix section lines.
    if (b.kind == "coalgebra" || b.kind == "bialgebra") {
      if (head == "comult") {
        expect_args(toks, 1);
        b.open("comult", b.dim * b.dim, b.dim, line_no);
        continue;
      }
      if (head == "counit") {
        expect_args(toks, 1);
        b.open("counit", 1, b.dim, line_no);
        continue;
      }
    }
    if (b.kind == "algebra" || b.kind == "bialgebra") {
      if (head == "mult") {
        expect_args(toks, 1);
        b.open("mult", b.dim, b.dim * b.dim, line_no);
        continue;
      }
      if (head == "unit") {
        expect_args(toks, 1);
        b.open("unit", b.dim, 1, line_no);
        continue;
      }
    }
    if (b.kind == "comodule" && head == "coaction") {
      expect_args(toks, 1);
      b.open("coaction", b.dim * b.over_coalgebra.space.dim, b.dim, line_no);
      continue;
    }
    if (b.kind == "oplax" && head == "b") {
      expect_args(toks, 1);
      b.open("b", b.carrier * b.to_coalgebra.space.dim,
             b.from_coalgebra.space.dim * b.carrier, line_no);
      continue;
    }
    if (b.kind == "adjunction") {
      if (head == "unit") {
        expect_args(toks, 1);
        b.open("unit", b.dim * b.dim, 1, line_no);
        continue;
      }
      if (head == "counit") {
        expect_args(toks, 1);
        b.open("counit", 1, b.dim * b.dim, line_no);
        continue;
      }
    }
    if ((b.kind == "complex" || b.kind == "dgcomodule") && head == "d") {
      expect_args(toks, 2);
      if (!b.have_dims) throw ParseError(line_no, "dims must precede differentials");
      const int n = parse_int(toks[1], line_no);
      if (n < b.min_deg || n > b.max_deg)
        throw ParseError(line_no, "degree " + toks[1] + " out of range");
      b.open("d " + toks[1], b.dim_at(n - 1), b.dim_at(n), line_no);
      continue;
    }
    if (b.kind == "dgcomodule" && head == "coaction") {
      expect_args(toks, 2);
      if (!b.have_dims) throw ParseError(line_no, "dims must precede coactions");
      const int n = parse_int(toks[1], line_no);
      if (n < b.min_deg || n > b.max_deg)
        throw ParseError(line_no, "degree " + toks[1] + " out of range");
      b.open("coaction " + toks[1], b.dim_at(n) * b.over_bialgebra.dim(), b.dim_at(n), line_no);
      continue;
    }
    throw ParseError(line_no, "unexpected line '" + head + "' inside " + b.kind + " block");
  }
  if (open) throw ParseError(line_no, "unterminated " + b.kind + " block");
  return file;
}

WorkbenchFile parse_workbench_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workbench(buffer.str());
}

namespace {

void emit_matrix(std::ostream& out, const std::string& header, const LinMap& m) {
  if (m.is_zero()) return;
  out << header << "\n";
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) out << "entry " << r << " " << c << " " << m.at(r, c) << "\n";
}

}  // namespace

std::string serialize(const Declaration& d) {
  std::ostringstream out;
  if (const auto* c = std::get_if<FinCoalgebra>(&d.value)) {
    out << "coalgebra " << d.name << " " << c->space.dim << "\n";
    emit_matrix(out, "comult", c->comult);
    emit_matrix(out, "counit", c->counit);
  } else if (const auto* a = std::get_if<FinAlgebra>(&d.value)) {
    out << "algebra " << d.name << " " << a->space.dim << "\n";
    emit_matrix(out, "mult", a->mult);
    emit_matrix(out, "unit", a->unit);
  } else if (const auto* h = std::get_if<FinBialgebra>(&d.value)) {
    out << "bialgebra " << d.name << " " << h->dim() << "\n";
    emit_matrix(out, "comult", h->comult());
    emit_matrix(out, "counit", h->counit());
    emit_matrix(out, "mult", h->mult());
    emit_matrix(out, "unit", h->unit());
  } else if (const auto* v = std::get_if<ComoduleDecl>(&d.value)) {
    out << "comodule " << d.name << " " << v->value.space.dim << " over " << v->over << "\n";
    emit_matrix(out, "coaction", v->value.coaction);
  } else if (const auto* s = std::get_if<OplaxDecl>(&d.value)) {
    out << "oplax " << d.name << " " << s->value.carrier.dim << " from " << s->from << " to "
        << s->to << "\n";
    emit_matrix(out, "b", s->value.b);
  } else if (const auto* adj = std::get_if<AdjunctionData>(&d.value)) {
    out << "adjunction " << d.name << " " << adj->left.dim << "\n";
    emit_matrix(out, "unit", adj->unit);
    emit_matrix(out, "counit", adj->counit);
  } else if (const auto* x = std::get_if<ChainComplex>(&d.value)) {
    out << "complex " << d.name << " " << x->min_deg << " " << x->max_deg << "\n";
    out << "dims";
    for (int n = x->min_deg; n <= x->max_deg; ++n) out << " " << x->dim_at(n);
    out << "\n";
    for (int n = x->min_deg; n <= x->max_deg; ++n)
      emit_matrix(out, "d " + std::to_string(n), x->d_at(n));
  } else if (const auto* v = std::get_if<DgComoduleDecl>(&d.value)) {
    const ChainComplex& x = v->value.complex;
    out << "dgcomodule " << d.name << " " << x.min_deg << " " << x.max_deg << " over "
        << v->over << "\n";
    out << "dims";
    for (int n = x.min_deg; n <= x.max_deg; ++n) out << " " << x.dim_at(n);
    out << "\n";
    for (int n = x.min_deg; n <= x.max_deg; ++n)
      emit_matrix(out, "d " + std::to_string(n), x.d_at(n));
    for (int n = x.min_deg; n <= x.max_deg; ++n)
      emit_matrix(out, "coaction " + std::to_string(n), v->value.component(n).coaction);
  }
  out << "end\n";
  return out.str();
}

std::string serialize(const WorkbenchFile& f) {
  std::ostringstream out;
  out << "format 1\n";
  for (const Declaration& d : f.decls) {
    out << "\n";
    out << serialize(d);
  }
  return out.str();
}

}  // namespace wb
