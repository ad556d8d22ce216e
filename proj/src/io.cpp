#include "toroidal/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace toroidal {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

// Walks the tokens of one line.
class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line) {}

  bool done() const { return pos_ >= line_.tokens.size(); }
  const std::string& peek() const { return line_.tokens[pos_].text; }

  [[noreturn]] void fail(const std::string& message) const {
    const std::size_t column =
        done() ? (line_.tokens.empty() ? 1 : line_.tokens.back().column + line_.tokens.back().text.size())
               : line_.tokens[pos_].column;
    throw ParseError(line_.number, column, message);
  }

  // Reports at the token just consumed.
  [[noreturn]] void fail_back(const std::string& message) const {
    throw ParseError(line_.number, line_.tokens[pos_ == 0 ? 0 : pos_ - 1].column, message);
  }

  const std::string& word() {
    if (done()) fail("unexpected end of line");
    return line_.tokens[pos_++].text;
  }

  void expect(const std::string& keyword) {
    if (done() || peek() != keyword) fail("expected '" + keyword + "'");
    ++pos_;
  }

  Integer integer() {
    if (done()) fail("expected an integer");
    const std::string& t = peek();
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size() || t.find_first_not_of("0123456789", start) != std::string::npos)
      fail("expected an integer, found '" + t + "'");
    ++pos_;
    return Integer(t[0] == '+' ? t.substr(1) : t);
  }

  std::size_t count() {
    if (!done() && !peek().empty() && peek()[0] == '-') fail("expected a nonnegative integer");
    const Integer v = integer();
    if (v > Integer(std::numeric_limits<long>::max())) {
      --pos_;
      fail("integer out of range");
    }
    return static_cast<std::size_t>(v.convert_to<long>());
  }

  std::uint64_t hex() {
    const std::string& t = word();
    if (t.size() != 16 || t.find_first_not_of("0123456789abcdef") != std::string::npos) {
      --pos_;
      fail("expected 16 lowercase hex digits");
    }
    return std::stoull(t, nullptr, 16);
  }

  // Integers up to the end of the line or the given stop word.
  LatticeVector vector(const std::string& stop = "") {
    std::vector<Integer> v;
    while (!done() && (stop.empty() || peek() != stop)) v.push_back(integer());
    if (v.empty()) fail("expected coordinates");
    return from_std(v);
  }

  std::vector<RayId> ids(const std::string& stop = "") {
    std::vector<RayId> v;
    while (!done() && (stop.empty() || peek() != stop)) v.push_back(count());
    return v;
  }

  void end() {
    if (!done()) fail("unexpected token '" + peek() + "'");
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

void header(const std::vector<Line>& lines, const std::string& magic) {
  if (lines.empty()) throw ParseError(1, 1, "empty file");
  Cursor c(lines.front());
  c.expect(magic);
  if (c.count() != 1) c.fail_back("unsupported format version");
  c.end();
}

std::string ids_text(const std::vector<RayId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + std::to_string(ids[i]);
  return out;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) out << " ;";
    for (Index j = 0; j < m.cols(); ++j) out << ' ' << m(i, j).str();
  }
}

}  // namespace

FanFile parse_fan(std::istream& in) {
  const auto lines = tokenize(in);
  header(lines, "toroidal-fan");
  FanFile fan;
  bool have_rank = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Cursor c(lines[i]);
    const std::string key = c.word();
    if (key == "rank") {
      if (have_rank) c.fail_back("rank given twice");
      const std::size_t r = c.count();
      if (r == 0) c.fail_back("rank must be positive");
      fan.rank = static_cast<Index>(r);
      have_rank = true;
    } else if (!have_rank) {
      c.fail_back("expected 'rank' before '" + key + "'");
    } else if (key == "ray") {
      const LatticeVector v = c.vector();
      if (v.size() != fan.rank) c.fail_back("ray has " + std::to_string(v.size()) + " coordinates, rank is " +
                                       std::to_string(fan.rank));
      fan.rays.push_back(v);
    } else if (key == "cone") {
      std::vector<RayId> ids;
      while (!c.done()) {
        const RayId id = c.count();
        if (id >= fan.rays.size()) {
          throw ParseError(lines[i].number, lines[i].tokens[ids.size() + 1].column,
                           "ray index " + std::to_string(id) + " out of range");
        }
        ids.push_back(id);
      }
      if (ids.empty()) c.fail("cone needs at least one ray");
      fan.cones.emplace_back(std::move(ids));
    } else if (key == "generator") {
      IntMatrix m(fan.rank, fan.rank);
      for (Index r = 0; r < fan.rank; ++r) {
        if (r) c.expect(";");
        for (Index k = 0; k < fan.rank; ++k) m(r, k) = c.integer();
      }
      fan.generators.push_back(std::move(m));
    } else {
      throw ParseError(lines[i].number, lines[i].tokens[0].column, "unknown keyword '" + key + "'");
    }
    c.end();
  }
  if (!have_rank) throw ParseError(lines.front().number, 1, "missing rank");
  return fan;
}

FanFile parse_fan(const std::string& text) {
  std::istringstream in(text);
  return parse_fan(in);
}

FanFile read_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return parse_fan(in);
}

void write_fan(std::ostream& out, const Complex& complex, const std::vector<IntMatrix>& generators) {
  out << "toroidal-fan 1\n";
  out << "rank " << complex.ambient_rank() << '\n';
  for (const auto& r : complex.rays()) out << "ray " << to_string(r) << '\n';
  for (const auto& c : complex.maximal_cones()) out << "cone " << ids_text(c.rays) << '\n';
  for (const auto& g : generators) {
    out << "generator";
    write_matrix(out, g);
    out << '\n';
  }
}

std::string fan_text(const Complex& complex, const std::vector<IntMatrix>& generators) {
  std::ostringstream out;
  write_fan(out, complex, generators);
  return out.str();
}

ResolutionCertificate parse_certificate(std::istream& in) {
  const auto lines = tokenize(in);
  header(lines, "toroidal-certificate");
  ResolutionCertificate cert;
  std::size_t i = 1;

  auto line = [&](const std::string& key) {
    if (i >= lines.size()) throw ParseError(lines.back().number + 1, 1, "expected '" + key + "'");
    Cursor c(lines[i]);
    c.expect(key);
    return c;
  };
  auto next_is = [&](const std::string& key) { return i < lines.size() && lines[i].tokens[0].text == key; };

  {
    Cursor c = line("input-hash");
    cert.input_hash = c.hex();
    c.end();
    ++i;
  }
  {
    Cursor c = line("mode");
    const std::string m = c.word();
    if (m != "canonical" && m != "plain") c.fail_back("unknown mode '" + m + "'");
    cert.mode = parse_mode(m);
    c.end();
    ++i;
  }
  {
    Cursor c = line("group-order");
    cert.group_order = c.count();
    c.end();
    ++i;
  }
  {
    Cursor c = line("rank");
    cert.rank = static_cast<Index>(c.count());
    c.end();
    ++i;
  }

  while (next_is("stage")) {
    StageRecord s;
    {
      Cursor c = line("stage");
      const std::string kind = c.word();
      if (kind == "barycentric")
        s.kind = StageRecord::Kind::barycentric;
      else if (kind == "centered")
        s.kind = StageRecord::Kind::centered;
      else
        c.fail_back("unknown stage kind '" + kind + "'");
      s.pass = c.count();
      c.end();
      ++i;
    }
    while (next_is("center")) {
      Cursor c = line("center");
      Center center;
      center.generator = c.vector("host");
      c.expect("host");
      center.host = Cone(c.ids("drop"));
      c.expect("drop");
      s.drops.push_back(c.integer());
      c.end();
      s.centers.push_back(std::move(center));
      ++i;
    }
    {
      Cursor c = line("scale");
      s.scale = c.integer();
      c.end();
      ++i;
    }
    {
      Cursor c = line("multiplier");
      s.multiplier = c.integer();
      c.end();
      ++i;
    }
    while (next_is("new-ray")) {
      Cursor c = line("new-ray");
      const RayId id = c.count();
      s.new_rays.emplace_back(id, c.vector());
      ++i;
    }
    while (next_is("value")) {
      Cursor c = line("value");
      s.values.push_back(c.integer());
      c.end();
      ++i;
    }
    {
      Cursor c = line("output-hash");
      s.output_hash = c.hex();
      c.end();
      ++i;
    }
    {
      Cursor c = line("end-stage");
      c.end();
      ++i;
    }
    cert.stages.push_back(std::move(s));
  }

  while (next_is("round")) {
    RoundTrace r;
    {
      Cursor c = line("round");
      r.round = c.count();
      c.expect("max-index");
      r.max_index = c.integer();
      c.expect("total-index");
      r.total_index = c.integer();
      c.end();
      ++i;
    }
    while (next_is("host")) {
      Cursor c = line("host");
      HostTrace h;
      h.host = Cone(c.ids("index"));
      c.expect("index");
      h.index = c.integer();
      c.expect("child-max");
      h.child_max = c.integer();
      c.end();
      r.hosts.push_back(std::move(h));
      ++i;
    }
    cert.trace.push_back(std::move(r));
  }

  while (next_is("composite")) {
    Cursor c = line("composite");
    cert.composite.push_back(c.integer());
    c.end();
    ++i;
  }
  while (next_is("final-ray")) {
    Cursor c = line("final-ray");
    cert.final_rays.push_back(c.vector());
    ++i;
  }
  while (next_is("final-cone")) {
    Cursor c = line("final-cone");
    // ray ranges are checked by the verifier
    auto ids = c.ids();
    if (ids.empty()) c.fail("cone needs at least one ray");
    cert.final_cones.emplace_back(std::move(ids));
    ++i;
  }
  while (next_is("flag")) {
    Cursor c = line("flag");
    const std::string name = c.word();
    const std::size_t v = c.count();
    if (v > 1) c.fail_back("flag value must be 0 or 1");
    cert.flags.emplace_back(name, v == 1);
    c.end();
    ++i;
  }
  if (i < lines.size())
    throw ParseError(lines[i].number, lines[i].tokens[0].column,
                     "unexpected keyword '" + lines[i].tokens[0].text + "'");
  return cert;
}

ResolutionCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

ResolutionCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return parse_certificate(in);
}

void write_certificate(std::ostream& out, const ResolutionCertificate& cert) {
  out << "toroidal-certificate 1\n";
  out << "input-hash " << hex64(cert.input_hash) << '\n';
  out << "mode " << to_string(cert.mode) << '\n';
  out << "group-order " << cert.group_order << '\n';
  out << "rank " << cert.rank << '\n';
  for (const auto& s : cert.stages) {
    out << "stage " << (s.kind == StageRecord::Kind::barycentric ? "barycentric" : "centered") << ' ' << s.pass
        << '\n';
    for (std::size_t j = 0; j < s.centers.size(); ++j)
      out << "center " << to_string(s.centers[j].generator) << " host " << ids_text(s.centers[j].host.rays)
          << " drop " << (j < s.drops.size() ? s.drops[j].str() : "0") << '\n';
    out << "scale " << s.scale.str() << '\n';
    out << "multiplier " << s.multiplier.str() << '\n';
    for (const auto& [id, ray] : s.new_rays) out << "new-ray " << id << ' ' << to_string(ray) << '\n';
    for (const auto& v : s.values) out << "value " << v.str() << '\n';
    out << "output-hash " << hex64(s.output_hash) << '\n';
    out << "end-stage\n";
  }
  for (const auto& r : cert.trace) {
    out << "round " << r.round << " max-index " << r.max_index.str() << " total-index " << r.total_index.str()
        << '\n';
    for (const auto& h : r.hosts)
      out << "host " << ids_text(h.host.rays) << " index " << h.index.str() << " child-max " << h.child_max.str()
          << '\n';
  }
  for (const auto& v : cert.composite) out << "composite " << v.str() << '\n';
  for (const auto& r : cert.final_rays) out << "final-ray " << to_string(r) << '\n';
  for (const auto& c : cert.final_cones) out << "final-cone " << ids_text(c.rays) << '\n';
  for (const auto& [name, value] : cert.flags) out << "flag " << name << ' ' << (value ? 1 : 0) << '\n';
}

std::string certificate_text(const ResolutionCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

}  // namespace toroidal
