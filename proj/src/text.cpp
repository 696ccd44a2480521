#include "arthurkit/text.hpp"

#include <cctype>

namespace arthurkit {

std::string kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::Param: return "param";
    case ObjectKind::Ems: return "ems";
    case ObjectKind::LData: return "ldata";
  }
  return "";
}

void Workspace::declare(const RhoSymbol& rho) {
  rhos.emplace(rho.label, rho);
  if (!rho.is_self_dual()) rhos.emplace(rho.dual_label, rho.contragredient());
}

void Workspace::declare_all(const WorkspaceValue& v) {
  if (auto* p = std::get_if<ArthurParameter>(&v)) {
    for (const auto& [s, m] : p->summands) declare(s.rho);
  } else if (auto* e = std::get_if<ExtendedMultiSegment>(&v)) {
    for (const auto& b : e->blocks) declare(b.rho);
  } else if (auto* l = std::get_if<LData>(&v)) {
    for (const auto& s : l->segments) declare(s.rho);
    for (const auto& p : l->tempered.pieces()) declare(p.rho);
  }
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, int line) : s_(s), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool try_take(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!try_take(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos_;
    auto ok_first = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ok = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
    if (pos_ >= s_.size() || !ok_first(s_[pos_])) fail("expected a label");
    while (pos_ < s_.size() && ok(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  // Signed integer or fraction.
  std::string number() {
    skip_ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (b == pos_) fail("expected a number");
    return std::string(s_.substr(b, pos_ - b));
  }
  std::int64_t integer() {
    std::string t = number();
    Rational r = wrap([&] { return Rational::parse(t); });
    if (r.den() != 1) fail("expected an integer, got " + t);
    return r.num();
  }
  HalfInt half() {
    std::string t = number();
    return wrap([&] { return HalfInt::parse(t); });
  }
  Rational rational() {
    std::string t = number();
    return wrap([&] { return Rational::parse(t); });
  }
  int sign() {
    skip_ws();
    if (try_take("+")) return 1;
    if (try_take("-")) return -1;
    fail("expected + or -");
  }
  // Runs f, rethrowing any error with this cursor's position.
  template <class F>
  auto wrap(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

const RhoSymbol& lookup(const Workspace& ws, Cursor& c, const std::string& label) {
  auto it = ws.rhos.find(label);
  if (it == ws.rhos.end()) c.fail("undeclared rho '" + label + "'");
  return it->second;
}

void parse_rho(Workspace& ws, Cursor& c) {
  std::string label = c.ident();
  c.expect("dim");
  std::int64_t dim = c.integer();
  c.expect("parity");
  std::string p = c.ident();
  if (p.size() != 1) c.fail("parity must be O, S or N");
  Parity parity = c.wrap([&] { return parity_from_letter(p[0]); });
  bool unramified = false;
  std::string dual;
  while (!c.at_end()) {
    if (c.try_take("unramified")) {
      unramified = true;
    } else if (c.try_take("dual")) {
      dual = c.ident();
    } else {
      c.fail("unexpected token in rho declaration");
    }
  }
  RhoSymbol rho = c.wrap([&] {
    if (parity == Parity::NonSelfDual) {
      if (dual.empty()) throw InputError("non-self-dual rho needs 'dual <label>'");
      return RhoSymbol::non_self_dual(label, dual, dim, unramified);
    }
    if (!dual.empty() && dual != label) throw InputError("self-dual rho cannot name a different dual");
    return RhoSymbol::self_dual(label, dim, parity, unramified);
  });
  auto check_same = [&](const RhoSymbol& r) {
    auto it = ws.rhos.find(r.label);
    if (it == ws.rhos.end()) return;
    const RhoSymbol& o = it->second;
    if (o.dim != r.dim || o.parity != r.parity || o.dual_label != r.dual_label || o.unramified != r.unramified)
      c.fail("conflicting declaration of rho '" + r.label + "'");
  };
  check_same(rho);
  if (!rho.is_self_dual()) check_same(rho.contragredient());
  ws.declare(rho);
}

ArthurParameter parse_param(const Workspace& ws, GroupTag g, Cursor& c) {
  ArthurParameter psi{g, {}};
  do {
    const RhoSymbol& rho = lookup(ws, c, c.ident());
    Rational x(0);
    if (c.try_take("@")) x = c.rational();
    c.expect("S");
    std::int64_t a = c.integer();
    c.expect("S");
    std::int64_t b = c.integer();
    psi.summands.add(c.wrap([&] { return Summand::make(rho, x, a, b); }));
  } while (c.try_take(";"));
  if (!c.at_end()) c.fail("unexpected trailing text");
  return psi;
}

ExtendedMultiSegment parse_ems(const Workspace& ws, GroupTag g, Cursor& c) {
  std::vector<EmsBlock> blocks;
  do {
    const RhoSymbol& rho = lookup(ws, c, c.ident());
    if (!rho.is_self_dual()) c.fail("extended multi-segments need self-dual rho");
    ExtendedRow r;
    c.expect("[");
    r.A = c.half();
    c.expect(",");
    r.B = c.half();
    c.expect("]");
    c.expect("l=");
    r.l = c.integer();
    c.expect("eta=");
    r.eta = c.sign();
    HalfInt d = r.A - r.B;
    if (!d.is_integer() || d.twice() < 0) c.fail("row needs A - B in Z>=0");
    if ((r.A + r.B).twice() < 0) c.fail("row needs A + B >= 0");
    if (blocks.empty() || !(blocks.back().rho == rho)) {
      auto it = std::find_if(blocks.begin(), blocks.end(), [&](const EmsBlock& b) { return b.rho == rho; });
      if (it != blocks.end()) c.fail("rows of '" + rho.label + "' must be contiguous");
      blocks.push_back(EmsBlock{rho, {}});
    }
    blocks.back().rows.push_back(r);
  } while (c.try_take(";"));
  if (!c.at_end()) c.fail("unexpected trailing text");
  return make_ems(g, std::move(blocks));
}

LData parse_ldata(const Workspace& ws, GroupTag g, Cursor& c) {
  c.expect("L(");
  std::vector<GLSegmentRep> segs;
  while (c.try_take("D(")) {
    const RhoSymbol& rho = lookup(ws, c, c.ident());
    c.expect(",");
    HalfInt x = c.half();
    c.expect(",");
    HalfInt y = c.half();
    c.expect(")");
    if (x < y) c.fail("segment needs x >= y");
    segs.push_back(GLSegmentRep::steinberg(rho, x, y));
    c.try_take(",");
  }
  std::vector<std::pair<RhoSymbol, std::int64_t>> phi;
  std::map<std::pair<std::string, std::int64_t>, int> eps;
  if (c.try_take(";")) {
    c.expect("phi");
    c.expect("=");
    if (!c.try_take("0")) {
      do {
        const RhoSymbol& rho = lookup(ws, c, c.ident());
        c.expect("*S");
        phi.emplace_back(rho, c.integer());
      } while (c.try_take("+"));
    }
    if (c.try_take(";")) {
      c.expect("eps");
      c.expect("=");
      if (!c.try_take("1")) {
        do {
          std::string label = c.ident();
          c.expect("*S");
          std::int64_t a = c.integer();
          c.expect(":");
          int s = c.sign();
          if (!eps.emplace(std::pair{label, a}, s).second) c.fail("eps lists " + label + "*S" + std::to_string(a) + " twice");
        } while (c.try_take(","));
      }
    }
  }
  c.expect(")");
  if (!c.at_end()) c.fail("unexpected trailing text");
  TemperedData t;
  for (const auto& [rho, a] : phi) {
    auto it = eps.find({rho.label, a});
    int s = it == eps.end() ? 1 : it->second;
    c.wrap([&] { t.add(rho, a, 1, s); });
  }
  for (const auto& [key, s] : eps) {
    bool found = std::any_of(phi.begin(), phi.end(),
                             [&](const auto& p) { return p.first.label == key.first && p.second == key.second; });
    if (!found) c.fail("eps names " + key.first + "*S" + std::to_string(key.second) + " which is not in phi");
  }
  return c.wrap([&] { return make_ldata(g, std::move(segs), std::move(t)); });
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  Workspace ws;
  std::optional<GroupTag> current;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    Cursor c(line, line_no);
    if (c.at_end()) continue;
    std::string head = c.ident();
    if (head == "group") {
      std::string fam = c.ident();
      Family f;
      if (fam == "Sp") f = Family::Sp;
      else if (fam == "SO") f = Family::SOodd;
      else c.fail("group must be Sp or SO");
      std::int64_t n = c.integer();
      if (n < 1) c.fail("group rank must be positive");
      if (!c.at_end()) c.fail("unexpected trailing text");
      current = GroupTag{f, n};
      if (!ws.group) ws.group = current;
    } else if (head == "rho") {
      parse_rho(ws, c);
    } else if (head == "param" || head == "ems" || head == "ldata") {
      if (!current) c.fail("objects need a preceding group line");
      WorkspaceObject o;
      o.line = line_no;
      if (head == "param") o.value = parse_param(ws, *current, c);
      else if (head == "ems") o.value = parse_ems(ws, *current, c);
      else o.value = parse_ldata(ws, *current, c);
      ws.objects.push_back(std::move(o));
    } else {
      c.fail("unknown directive '" + head + "'");
    }
  }
  return ws;
}

GroupTag group_of(const WorkspaceValue& v) {
  return std::visit([](const auto& x) { return x.group; }, v);
}

std::string serialize_group(GroupTag g) { return "group " + g.family_name() + " " + std::to_string(g.n); }

std::string serialize_rho(const RhoSymbol& rho) {
  std::string s = "rho " + rho.label + " dim " + std::to_string(rho.dim) + " parity " + parity_letter(rho.parity);
  if (rho.unramified) s += " unramified";
  if (!rho.is_self_dual()) s += " dual " + rho.dual_label;
  return s;
}

std::string serialize(const ArthurParameter& psi) {
  std::string s = "param";
  bool first = true;
  for (const auto& t : psi.summands.expanded()) {
    s += first ? " " : " ; ";
    first = false;
    s += t.rho.label;
    if (!t.x.is_zero()) s += " @" + t.x.to_string();
    s += " S" + std::to_string(t.a) + " S" + std::to_string(t.b);
  }
  return s;
}

std::string serialize(const ExtendedMultiSegment& e) {
  std::string s = "ems";
  bool first = true;
  for (const auto& b : e.blocks)
    for (const auto& r : b.rows) {
      s += first ? " " : " ; ";
      first = false;
      s += b.rho.label + " [" + r.A.to_string() + "," + r.B.to_string() + "] l=" + std::to_string(r.l) +
           " eta=" + (r.eta > 0 ? "+" : "-");
    }
  return s;
}

std::string serialize(const LData& pi) {
  std::string s = "ldata L(";
  for (const auto& g : pi.segments) s += " D(" + g.rho.label + "," + g.x.to_string() + "," + g.y.to_string() + ")";
  s += " ; phi = ";
  const auto& ps = pi.tempered.pieces();
  if (ps.empty()) {
    s += "0";
  } else {
    bool first = true;
    for (const auto& p : ps)
      for (std::int64_t i = 0; i < p.multiplicity; ++i) {
        if (!first) s += " + ";
        first = false;
        s += p.rho.label + "*S" + std::to_string(p.a);
      }
    s += " ; eps = ";
    first = true;
    for (const auto& p : ps) {
      if (!first) s += ", ";
      first = false;
      s += p.rho.label + "*S" + std::to_string(p.a) + ":" + (p.sign > 0 ? "+" : "-");
    }
  }
  return s + " )";
}

std::string serialize(const WorkspaceValue& v) {
  return std::visit([](const auto& x) { return serialize(x); }, v);
}

std::string serialize_workspace(const Workspace& ws) {
  std::string out;
  if (ws.group) out += serialize_group(*ws.group) + "\n";
  for (const auto& [label, rho] : ws.rhos) out += serialize_rho(rho) + "\n";
  std::optional<GroupTag> current = ws.group;
  for (const auto& o : ws.objects) {
    GroupTag g = group_of(o.value);
    if (!current || !(*current == g)) {
      out += serialize_group(g) + "\n";
      current = g;
    }
    out += serialize(o.value) + "\n";
  }
  return out;
}

using nlohmann::json;

json to_json(GroupTag g) { return json{{"family", g.family_name()}, {"n", g.n}}; }

json to_json(const RhoSymbol& rho) {
  return json{{"label", rho.label},
              {"dim", rho.dim},
              {"parity", std::string(1, parity_letter(rho.parity))},
              {"unramified", rho.unramified},
              {"dual", rho.dual_label}};
}

json to_json(const Summand& s) {
  return json{{"rho", s.rho.label}, {"x", s.x.to_string()}, {"a", s.a}, {"b", s.b}};
}

json to_json(const ArthurParameter& psi) {
  json arr = json::array();
  for (const auto& t : psi.summands.expanded()) arr.push_back(to_json(t));
  return json{{"kind", "param"}, {"summands", arr}};
}

json to_json(const ExtendedMultiSegment& e) {
  json arr = json::array();
  for (const auto& b : e.blocks)
    for (const auto& r : b.rows)
      arr.push_back(json{{"rho", b.rho.label},
                         {"A", r.A.to_string()},
                         {"B", r.B.to_string()},
                         {"l", r.l},
                         {"eta", r.eta > 0 ? "+" : "-"}});
  return json{{"kind", "ems"}, {"rows", arr}};
}

json to_json(const LData& pi) {
  json segs = json::array(), phi = json::array(), eps = json::array();
  for (const auto& g : pi.segments)
    segs.push_back(json{{"rho", g.rho.label}, {"x", g.x.to_string()}, {"y", g.y.to_string()}});
  for (const auto& p : pi.tempered.pieces()) {
    for (std::int64_t i = 0; i < p.multiplicity; ++i) phi.push_back(json{{"rho", p.rho.label}, {"k", p.a}});
    eps.push_back(json{{"rho", p.rho.label}, {"k", p.a}, {"sign", p.sign > 0 ? "+" : "-"}});
  }
  return json{{"kind", "ldata"}, {"segments", segs}, {"phi", phi}, {"eps", eps}};
}

json to_json(const WorkspaceValue& v) {
  json j = std::visit([](const auto& x) { return to_json(x); }, v);
  j["group"] = to_json(group_of(v));
  return j;
}

json to_json(const Workspace& ws) {
  json rhos = json::array(), objs = json::array();
  for (const auto& [label, rho] : ws.rhos) rhos.push_back(to_json(rho));
  for (const auto& o : ws.objects) objs.push_back(to_json(o.value));
  json out{{"rhos", rhos}, {"objects", objs}};
  out["group"] = ws.group ? to_json(*ws.group) : json(nullptr);
  return out;
}

}  // namespace arthurkit
