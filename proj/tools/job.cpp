#include "job.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "koszul/field.hpp"

namespace koszul::cli {

JobError::JobError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",     "nf",           "initial", "hilbert", "betti", "invariants",
                                              "poincare", "koszul-probe", "check",   "roos",    "delta"};
  return names;
}

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) {
    // Comments become blanks so offsets keep pointing into the original.
    bool comment = false;
    for (char& c : src_) {
      if (c == '\n') comment = false;
      else if (c == '#') comment = true;
      if (comment) c = ' ';
    }
  }

  JobSpec run() {
    for (auto [b, e] : statements()) statement(b, e);
    if (spec_.command.empty()) fail(src_.size(), "missing cmd statement");
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw JobError(line, col, message);
  }

  std::vector<std::pair<std::size_t, std::size_t>> statements() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t begin = 0;
    for (std::size_t k = 0; k <= src_.size(); ++k) {
      bool end = k == src_.size() || src_[k] == ';';
      if (!end && src_[k] == '\n') {
        std::size_t p = k;
        while (p > begin && std::isspace(static_cast<unsigned char>(src_[p - 1]))) --p;
        end = !(p > begin && src_[p - 1] == ',');
      }
      if (end) {
        out.emplace_back(begin, k);
        begin = k + 1;
      }
    }
    return out;
  }

  std::vector<Token> tokens(std::size_t b, std::size_t e) const {
    std::vector<Token> out;
    std::size_t k = b;
    while (k < e) {
      while (k < e && std::isspace(static_cast<unsigned char>(src_[k]))) ++k;
      if (k >= e) break;
      std::size_t s = k;
      while (k < e && !std::isspace(static_cast<unsigned char>(src_[k]))) ++k;
      out.push_back({src_.substr(s, k - s), s});
    }
    return out;
  }

  template <typename T>
  T number(const Token& t, std::string_view text, std::size_t offset) const {
    T v{};
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size() || text.empty())
      fail(offset, "expected a number, got '" + std::string(text) + "'");
    (void)t;
    return v;
  }

  void statement(std::size_t b, std::size_t e) {
    auto toks = tokens(b, e);
    if (toks.empty()) return;
    const std::string& kw = toks[0].text;
    if (kw == "ring")
      ring(toks);
    else if (kw == "ideal")
      ideal(toks[0].offset, toks[0].offset + kw.size(), e);
    else if (kw == "cmd")
      command(toks, e);
    else
      fail(toks[0].offset, "unknown statement '" + kw + "' (expected ring, ideal or cmd)");
  }

  void ring(const std::vector<Token>& toks) {
    if (spec_.has_ring) fail(toks[0].offset, "duplicate ring statement");
    spec_.has_ring = true;
    bool have_vars = false;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      const Token& t = toks[k];
      auto eq = t.text.find('=');
      if (eq == std::string::npos) fail(t.offset, "expected key=value, got '" + t.text + "'");
      std::string key = t.text.substr(0, eq);
      std::string_view value = std::string_view(t.text).substr(eq + 1);
      std::size_t voff = t.offset + eq + 1;
      if (key == "p") {
        auto p = number<std::uint64_t>(t, value, voff);
        if (p != 0 && (p >= (1ull << 31) || !is_prime(p)))
          fail(voff, "characteristic must be 0 or a prime below 2^31, got " + std::string(value));
        spec_.characteristic = static_cast<std::uint32_t>(p);
      } else if (key == "vars") {
        have_vars = true;
        spec_.vars = variables(value, voff);
      } else if (key == "order") {
        if (value != "grevlex" && value != "grlex" && value != "lex")
          fail(voff, "unknown order '" + std::string(value) + "'");
        spec_.order = value;
      } else if (key == "weights") {
        spec_.order = "weights";
        spec_.weights.clear();
        std::size_t s = 0;
        while (s <= value.size()) {
          std::size_t c = std::min(value.find(',', s), value.size());
          int w = number<int>(t, value.substr(s, c - s), voff + s);
          if (w <= 0) fail(voff + s, "weights must be positive");
          spec_.weights.push_back(w);
          s = c + 1;
        }
      } else {
        fail(t.offset, "unknown ring key '" + key + "'");
      }
    }
    if (!have_vars) fail(toks[0].offset, "ring needs vars=...");
    if (spec_.order == "weights" && spec_.weights.size() != spec_.vars.size())
      fail(toks[0].offset, "need one weight per variable");
    build_ring();
  }

  std::vector<std::string> variables(std::string_view value, std::size_t voff) const {
    std::vector<std::string> names;
    if (auto dots = value.find(".."); dots != std::string_view::npos) {
      // x1..x6
      std::string_view lo = value.substr(0, dots), hi = value.substr(dots + 2);
      std::size_t split = lo.find_first_of("0123456789");
      if (split == std::string_view::npos || split == 0 || hi.substr(0, split) != lo.substr(0, split))
        fail(voff, "range must look like x1..x6");
      int a = number<int>({}, lo.substr(split), voff + split);
      int b = number<int>({}, hi.substr(split), voff + dots + 2 + split);
      if (a > b) fail(voff, "empty variable range");
      for (int k = a; k <= b; ++k) names.push_back(std::string(lo.substr(0, split)) + std::to_string(k));
    } else {
      std::size_t s = 0;
      while (s <= value.size()) {
        std::size_t c = std::min(value.find(',', s), value.size());
        std::string name(value.substr(s, c - s));
        bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
        for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
        if (!ok) fail(voff + s, "bad variable name '" + name + "'");
        names.push_back(name);
        s = c + 1;
      }
    }
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) fail(voff, "duplicate variable '" + n + "'");
    if (names.size() > kMaxVars) fail(voff, "at most " + std::to_string(kMaxVars) + " variables");
    return names;
  }

  void build_ring() {
    const std::size_t n = spec_.vars.size();
    std::optional<TermOrder> order;
    if (spec_.order == "lex") order = TermOrder::lex(n);
    else if (spec_.order == "grlex") order = TermOrder(OrderKind::GradedLex, n);
    else if (spec_.order == "weights") {
      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[k] = k;
      order = TermOrder(OrderKind::Weighted, perm, spec_.weights);
    } else {
      order = TermOrder::grevlex(n);
    }
    spec_.ring = make_ring(Field(spec_.characteristic), spec_.vars, order);
  }

  Polynomial polynomial(std::size_t b, std::size_t e, bool homogeneous) const {
    std::string piece = src_.substr(b, e - b);
    Polynomial f;
    try {
      f = parse_polynomial(piece, spec_.ring);
    } catch (const ParseError& err) {
      fail(b + err.column() - 1, err.what());
    } catch (const std::exception& err) {
      fail(b, err.what());
    }
    std::size_t lead = b;
    while (lead < e && std::isspace(static_cast<unsigned char>(src_[lead]))) ++lead;
    if (homogeneous && f.is_zero()) fail(lead, "zero generator");
    if (homogeneous && f.is_constant()) fail(lead, "constant generator");
    if (homogeneous && !f.is_homogeneous()) fail(lead, "inhomogeneous generator '" + f.to_string() + "'");
    return f;
  }

  void ideal(std::size_t kw, std::size_t b, std::size_t e) {
    if (!spec_.has_ring) fail(kw, "ideal before ring");
    if (spec_.has_ideal) fail(kw, "duplicate ideal statement");
    spec_.has_ideal = true;
    std::size_t s = b;
    bool blank = true;
    for (std::size_t k = b; k < e; ++k) blank = blank && std::isspace(static_cast<unsigned char>(src_[k]));
    if (blank) return;
    while (s <= e) {
      std::size_t c = s;
      while (c < e && src_[c] != ',') ++c;
      spec_.generators.push_back(polynomial(s, c, true));
      s = c + 1;
    }
  }

  void command(const std::vector<Token>& toks, std::size_t e) {
    if (!spec_.command.empty()) fail(toks[0].offset, "only one cmd per job");
    if (toks.size() < 2) fail(toks[0].offset, "cmd needs a command name");
    const Token& name = toks[1];
    if (std::find(command_names().begin(), command_names().end(), name.text) == command_names().end())
      fail(name.offset, "unknown command '" + name.text + "'");
    spec_.command = name.text;
    std::size_t k = 2;
    if (spec_.command == "nf") {
      std::size_t b = name.offset + name.text.size();
      std::size_t end = e;
      while (k < toks.size() && toks[k].text.rfind("--", 0) != 0) ++k;
      if (k < toks.size()) end = toks[k].offset;
      if (!spec_.has_ring) fail(name.offset, "nf needs a ring");
      spec_.poly = polynomial(b, end, false);
      if (spec_.poly->is_zero() && src_.substr(b, end - b).find_first_not_of(" \t\n") == std::string::npos)
        fail(name.offset, "nf needs a polynomial");
    }
    if (spec_.command == "check" && k < toks.size() && toks[k].text.rfind("--", 0) != 0) spec_.check_name = toks[k++].text;
    for (; k < toks.size(); ++k) {
      const Token& t = toks[k];
      auto value = [&]() -> const Token& {
        if (k + 1 >= toks.size()) fail(t.offset, t.text + " needs a value");
        return toks[++k];
      };
      if (t.text == "--hmax") {
        const Token& v = value();
        spec_.hmax = number<int>(v, v.text, v.offset);
        if (spec_.hmax < 0) fail(v.offset, "hmax must be nonnegative");
      } else if (t.text == "--format") {
        const Token& v = value();
        if (v.text != "text" && v.text != "structured") fail(v.offset, "format is text or structured");
        spec_.format = v.text;
      } else if (t.text == "--seed") {
        const Token& v = value();
        spec_.seed = number<std::uint64_t>(v, v.text, v.offset);
      } else if (t.text == "--a") {
        const Token& v = value();
        spec_.a = number<int>(v, v.text, v.offset);
        if (spec_.a < 2) fail(v.offset, "the Roos family needs a >= 2");
      } else if (t.text == "--check-poincare") {
        spec_.check_poincare = true;
      } else if (t.text == "--over") {
        const Token& v = value();
        if (v.text != "ambient" && v.text != "self") fail(v.offset, "over is ambient or self");
        spec_.over = v.text;
      } else if (t.text == "--module") {
        const Token& v = value();
        if (v.text != "ring" && v.text != "k" && v.text != "augmentation" && v.text != "R+")
          fail(v.offset, "module is ring, k or augmentation");
        spec_.module = v.text == "R+" ? "augmentation" : v.text;
      } else if (t.text == "--all") {
        spec_.check_all = true;
      } else if (t.text == "--budget") {
        const Token& v = value();
        spec_.budget = number<std::size_t>(v, v.text, v.offset);
      } else if (t.text == "--dmax") {
        const Token& v = value();
        spec_.dmax = number<int>(v, v.text, v.offset);
      } else if (t.text == "--permutations") {
        const Token& v = value();
        spec_.permutations = number<std::size_t>(v, v.text, v.offset);
      } else if (t.text == "--weight-samples") {
        const Token& v = value();
        spec_.weight_samples = number<std::size_t>(v, v.text, v.offset);
      } else if (t.text == "--timings") {
        spec_.timings = true;
      } else {
        fail(t.offset, "unknown option '" + t.text + "'");
      }
    }
    if (spec_.command == "check" && spec_.check_all == !spec_.check_name.empty())
      fail(name.offset, "check needs a family name or --all");
    const bool standalone =
        spec_.command == "roos" || (spec_.command == "check" && (spec_.check_all || spec_.check_name == "roos"));
    if (!standalone && !spec_.has_ring) fail(name.offset, spec_.command + " needs a ring statement");
    if (spec_.command == "delta" && spec_.permutations == 0 && spec_.weight_samples == 0)
      fail(name.offset, "the order budget must be positive");
  }

  std::string src_;
  JobSpec spec_;
};

}  // namespace

JobSpec parse_job(std::string_view text) { return Parser(text).run(); }

std::string render_job(const JobSpec& s) {
  std::ostringstream os;
  if (s.has_ring) {
    os << "ring p=" << s.characteristic << " vars=";
    for (std::size_t k = 0; k < s.vars.size(); ++k) os << (k ? "," : "") << s.vars[k];
    if (s.order == "weights") {
      os << " weights=";
      for (std::size_t k = 0; k < s.weights.size(); ++k) os << (k ? "," : "") << s.weights[k];
    } else {
      os << " order=" << s.order;
    }
    os << "; ";
  }
  if (s.has_ideal) {
    os << "ideal ";
    for (std::size_t k = 0; k < s.generators.size(); ++k) os << (k ? ", " : "") << s.generators[k].to_string();
    os << "; ";
  }
  os << "cmd " << s.command;
  if (s.poly) os << " " << s.poly->to_string();
  if (!s.check_name.empty()) os << " " << s.check_name;
  if (s.check_all) os << " --all";
  os << " --hmax " << s.hmax << " --format " << s.format << " --seed " << s.seed << " --a " << s.a << " --over "
     << s.over << " --module " << s.module << " --budget " << s.budget << " --dmax " << s.dmax << " --permutations "
     << s.permutations << " --weight-samples " << s.weight_samples;
  if (s.check_poincare) os << " --check-poincare";
  if (s.timings) os << " --timings";
  return os.str();
}

}  // namespace koszul::cli
