#include "slw/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slw {

  namespace {
    using json = nlohmann::ordered_json;

    std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }

    struct Line {
      std::size_t              number = 0;
      std::string              keyword;
      std::string              rest;
      std::vector<std::string> fields;
    };

    std::vector<Line> tokenize(const std::string& text) {
      std::vector<Line>  out;
      std::istringstream in(text);
      std::string        raw;
      std::size_t        n = 0;
      while (std::getline(in, raw)) {
        ++n;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') {
          continue;
        }
        Line l;
        l.number       = n;
        auto sp        = t.find_first_of(" \t");
        l.keyword      = t.substr(0, sp);
        l.rest         = sp == std::string::npos ? "" : trim(t.substr(sp));
        std::istringstream fs(l.rest);
        for (std::string f; fs >> f;) {
          l.fields.push_back(f);
        }
        out.push_back(std::move(l));
      }
      return out;
    }

    [[noreturn]] void bad(const Line& l, const std::string& why) {
      throw input_error("line " + std::to_string(l.number) + ": " + why);
    }

    int to_int(const Line& l, const std::string& s) {
      try {
        std::size_t pos = 0;
        long        v   = std::stol(s, &pos);
        if (pos != s.size()) {
          bad(l, "expected an integer, got '" + s + "'");
        }
        return static_cast<int>(v);
      } catch (const std::logic_error&) {
        bad(l, "expected an integer, got '" + s + "'");
      }
    }

    // "<gen> -> <word>"
    std::pair<std::string, std::string> split_arrow(const Line& l) {
      auto p = l.rest.find("->");
      if (p == std::string::npos) {
        bad(l, "expected '<generator> -> <word>'");
      }
      return {trim(l.rest.substr(0, p)), trim(l.rest.substr(p + 2))};
    }

    Alphabet alphabet_of(const Line& l) {
      if (l.fields.empty()) {
        bad(l, "generators line is empty");
      }
      return Alphabet(l.fields);
    }

    std::string names_line(const Alphabet& a) {
      std::string out = "generators";
      for (auto const& n : a.names()) {
        out += " " + n;
      }
      return out;
    }

    // Surface block starting at lines[i]; advances i past it.
    SurfacePresentation parse_surface(const std::vector<Line>& lines, std::size_t& i) {
      if (i >= lines.size() || lines[i].keyword != "surface" || lines[i].fields.size() != 2) {
        throw input_error("expected 'surface <g> <b>'");
      }
      int g = to_int(lines[i], lines[i].fields[0]);
      int b = to_int(lines[i], lines[i].fields[1]);
      ++i;
      std::optional<Alphabet> alphabet;
      std::vector<std::string> boundary_text;
      std::size_t              first = i;
      for (; i < lines.size(); ++i) {
        auto const& l = lines[i];
        if (l.keyword == "generators") {
          alphabet = alphabet_of(l);
        } else if (l.keyword == "boundary") {
          boundary_text.push_back(l.rest);
        } else {
          break;
        }
      }
      if (g < 0 || b < 0) {
        throw input_error("genus and boundary count must be nonnegative");
      }
      SurfacePresentation std_s = build_surface(g, b);
      if (!alphabet && boundary_text.empty()) {
        return std_s;
      }
      Alphabet          a = alphabet ? *alphabet : std_s.alphabet;
      std::vector<Word> boundary;
      for (auto const& t : boundary_text) {
        boundary.push_back(parse_word(t, a));
      }
      if (a == std_s.alphabet && boundary == std_s.boundary_words) {
        return std_s;
      }
      if (b == 0) {
        bad(lines[first], "closed surfaces use the standard presentation");
      }
      if (boundary.size() != static_cast<std::size_t>(b)) {
        bad(lines[first], "expected " + std::to_string(b) + " boundary words");
      }
      return surface_from_boundary(g, a, boundary);
    }

    GroupPresentation parse_presentation(const std::vector<Line>& lines, std::size_t& i) {
      if (i >= lines.size() || lines[i].keyword != "group" || lines[i].fields.size() != 1) {
        throw input_error("expected 'group <kind>'");
      }
      GroupPresentation p;
      p.kind = lines[i].fields[0];
      ++i;
      if (i >= lines.size() || lines[i].keyword != "generators") {
        throw input_error("expected a generators line after 'group'");
      }
      p.alphabet = alphabet_of(lines[i]);
      ++i;
      for (; i < lines.size(); ++i) {
        auto const& l = lines[i];
        if (l.keyword == "rel") {
          p.relators.push_back(cyclic_reduction(parse_word(l.rest, p.alphabet)));
        } else if (l.keyword == "mark") {
          if (l.fields.size() < 2) {
            bad(l, "expected 'mark <name> <word>'");
          }
          auto w = trim(l.rest.substr(l.fields[0].size()));
          p.mark(l.fields[0], parse_word(w, p.alphabet));
        } else {
          break;
        }
      }
      return p;
    }

    std::vector<RelatorFactor> parse_factors(const std::vector<Line>& lines, std::size_t& i,
                                             const GroupPresentation& target) {
      std::vector<RelatorFactor> out;
      for (; i < lines.size() && lines[i].keyword == "factor"; ++i) {
        auto const& l = lines[i];
        if (l.fields.size() < 3) {
          bad(l, "expected 'factor <relator> <sign> <conjugator>'");
        }
        RelatorFactor f;
        int           r = to_int(l, l.fields[0]);
        if (r < 0 || static_cast<std::size_t>(r) >= target.relators.size()) {
          bad(l, "relator index out of range");
        }
        f.relator = static_cast<std::size_t>(r);
        f.sign    = to_int(l, l.fields[1]);
        if (f.sign != 1 && f.sign != -1) {
          bad(l, "sign must be 1 or -1");
        }
        std::string rest = l.rest;
        for (int k = 0; k < 2; ++k) {
          rest = trim(rest.substr(rest.find_first_of(" \t")));
        }
        f.conjugator = parse_word(rest, target.alphabet);
        out.push_back(std::move(f));
      }
      return out;
    }

    void write_factors(std::ostringstream& os, const std::vector<RelatorFactor>& fs,
                       const Alphabet& a) {
      for (auto const& f : fs) {
        os << "factor " << f.relator << ' ' << f.sign << ' ' << format_word(f.conjugator, a)
           << '\n';
      }
    }

    std::vector<Word> parse_images(const std::vector<Line>& lines, std::size_t& i,
                                   const Alphabet& source, const Alphabet& target) {
      std::vector<std::optional<Word>> images(source.size());
      for (; i < lines.size() && lines[i].keyword == "map"; ++i) {
        auto [g, w] = split_arrow(lines[i]);
        auto idx    = source.index_of(g);
        if (!idx) {
          bad(lines[i], "unknown source generator '" + g + "'");
        }
        if (images[*idx]) {
          bad(lines[i], "generator '" + g + "' mapped twice");
        }
        images[*idx] = parse_word(w, target);
      }
      std::vector<Word> out;
      for (std::size_t k = 0; k < images.size(); ++k) {
        if (!images[k]) {
          throw input_error("no image for generator '" + source.name(k) + "'");
        }
        out.push_back(*images[k]);
      }
      return out;
    }

    void write_images(std::ostringstream& os, const Alphabet& source, const Alphabet& target,
                      const std::vector<Word>& images) {
      for (std::size_t k = 0; k < images.size(); ++k) {
        os << "map " << source.name(k) << " -> " << format_word(images[k], target) << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Representations
    ////////////////////////////////////////////////////////////////////////

    json entry(const QuadNumber& q) { return json::array({q.rational_text(), q.radical_text()}); }
    json entry(const cplx& z) { return json::array({z.real(), z.imag()}); }
    json entry(const wcplx& z) {
      return json::array({z.real().str(36, std::ios::scientific),
                          z.imag().str(36, std::ios::scientific)});
    }

    BigRational parse_rational(const std::string& s) {
      try {
        return BigRational(s);
      } catch (const std::exception&) {
        throw input_error("bad rational '" + s + "'");
      }
    }

    QuadNumber exact_entry(const json& j) {
      if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw input_error("exact entries are [\"p/q\", \"p/q√d\"]");
      }
      std::string rad = j[1].get<std::string>();
      auto        p   = rad.find("√");
      if (p == std::string::npos) {
        throw input_error("bad radical part '" + rad + "'");
      }
      BigRational b = parse_rational(rad.substr(0, p));
      int         d = 0;
      try {
        d = std::stoi(rad.substr(p + std::string("√").size()));
      } catch (const std::exception&) {
        throw input_error("bad radicand in '" + rad + "'");
      }
      return QuadNumber(parse_rational(j[0].get<std::string>()), b, d);
    }

    cplx double_entry(const json& j) {
      if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw input_error("double entries are [re, im]");
      }
      return {j[0].get<double>(), j[1].get<double>()};
    }

    wcplx wide_entry(const json& j) {
      if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw input_error("binary128 entries are [\"re\", \"im\"]");
      }
      try {
        return wcplx(wreal(j[0].get<std::string>()), wreal(j[1].get<std::string>()));
      } catch (const std::exception&) {
        throw input_error("bad binary128 entry");
      }
    }

    template <typename T>
    std::string rep_text(const Representation<T>& r, const char* scalar) {
      json j;
      j["alphabet"] = r.alphabet().names();
      j["scalar"]   = scalar;
      json images   = json::object();
      for (std::size_t k = 0; k < r.alphabet().size(); ++k) {
        auto const& m            = r.image(k);
        images[r.alphabet().name(k)] =
            json{{"a", entry(m.a)}, {"b", entry(m.b)}, {"c", entry(m.c)}, {"d", entry(m.d)}};
      }
      j["images"] = images;
      return j.dump(1) + "\n";
    }

    template <typename T, typename F>
    Representation<T> rep_from(const json& j, const Alphabet& a, F&& read) {
      std::vector<Mat2<T>> mats;
      for (auto const& name : a.names()) {
        if (!j.contains(name)) {
          throw input_error("no matrix for generator '" + name + "'");
        }
        auto const& m = j.at(name);
        for (const char* key : {"a", "b", "c", "d"}) {
          if (!m.contains(key)) {
            throw input_error(std::string("matrix entry '") + key + "' missing for " + name);
          }
        }
        mats.push_back({read(m.at("a")), read(m.at("b")), read(m.at("c")), read(m.at("d"))});
      }
      return Representation<T>(a, std::move(mats));
    }
  }  // namespace

  std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw file_error("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw file_error("cannot write " + path);
    }
    out << text;
    if (!out) {
      throw file_error("write failed for " + path);
    }
  }

  std::string write_surface(const SurfacePresentation& s) {
    std::ostringstream os;
    os << "surface " << s.genus << ' ' << s.boundary_count << '\n';
    os << names_line(s.alphabet) << '\n';
    for (auto const& w : s.boundary_words) {
      os << "boundary " << format_word(w, s.alphabet) << '\n';
    }
    return os.str();
  }

  SurfacePresentation read_surface(const std::string& text) {
    auto        lines = tokenize(text);
    std::size_t i     = 0;
    auto        s     = parse_surface(lines, i);
    if (i != lines.size()) {
      bad(lines[i], "unexpected '" + lines[i].keyword + "'");
    }
    return s;
  }

  std::string write_presentation(const GroupPresentation& p) {
    std::ostringstream os;
    os << "group " << p.kind << '\n' << names_line(p.alphabet) << '\n';
    for (auto const& r : p.relators) {
      os << "rel " << format_word(r, p.alphabet) << '\n';
    }
    for (auto const& [n, w] : p.markers) {
      os << "mark " << n << ' ' << format_word(w, p.alphabet) << '\n';
    }
    return os.str();
  }

  GroupPresentation read_presentation(const std::string& text) {
    auto        lines = tokenize(text);
    std::size_t i     = 0;
    auto        p     = parse_presentation(lines, i);
    if (i != lines.size()) {
      bad(lines[i], "unexpected '" + lines[i].keyword + "'");
    }
    return p;
  }

  std::string write_map(const MarkedMap& m) {
    std::ostringstream os;
    os << "map " << m.name << '\n';
    for (auto const& [k, v] : m.params) {
      os << "param " << k << ' ' << v << '\n';
    }
    os << "source\n" << write_surface(m.source);
    os << "target\n" << write_presentation(m.target);
    os << "images\n";
    write_images(os, m.source.alphabet, m.target.alphabet, m.images);
    if (m.kernel_witness) {
      os << "witness " << format_word(*m.kernel_witness, m.source.alphabet) << '\n';
    }
    for (auto const& c : m.certificates) {
      os << "certificate\n";
      write_factors(os, c, m.target.alphabet);
    }
    if (!m.witness_certificate.empty()) {
      os << "witness-certificate\n";
      write_factors(os, m.witness_certificate, m.target.alphabet);
    }
    for (auto const& r : m.retractions) {
      os << "retraction";
      for (auto const& n : r.target().names()) {
        os << ' ' << n;
      }
      os << '\n';
      write_images(os, r.source(), r.target(), r.images());
    }
    return os.str();
  }

  MarkedMap read_map(const std::string& text) {
    auto        lines = tokenize(text);
    std::size_t i     = 0;
    MarkedMap   m;
    if (lines.empty() || lines[0].keyword != "map" || lines[0].fields.size() != 1) {
      throw input_error("map files start with 'map <name>'");
    }
    m.name = lines[0].fields[0];
    ++i;
    bool have_source = false, have_target = false, have_images = false;
    while (i < lines.size()) {
      auto const& l = lines[i];
      if (l.keyword == "param") {
        if (l.fields.size() != 2) {
          bad(l, "expected 'param <key> <value>'");
        }
        m.params.emplace_back(l.fields[0], to_int(l, l.fields[1]));
        ++i;
      } else if (l.keyword == "source") {
        ++i;
        m.source    = parse_surface(lines, i);
        have_source = true;
      } else if (l.keyword == "target") {
        ++i;
        m.target    = parse_presentation(lines, i);
        have_target = true;
      } else if (l.keyword == "images") {
        if (!have_source || !have_target) {
          bad(l, "images need source and target first");
        }
        ++i;
        m.images    = parse_images(lines, i, m.source.alphabet, m.target.alphabet);
        have_images = true;
      } else if (l.keyword == "witness") {
        if (!have_source) {
          bad(l, "witness needs the source first");
        }
        m.kernel_witness = parse_word(l.rest, m.source.alphabet);
        ++i;
      } else if (l.keyword == "certificate") {
        if (!have_target) {
          bad(l, "certificate needs the target first");
        }
        ++i;
        m.certificates.push_back(parse_factors(lines, i, m.target));
      } else if (l.keyword == "witness-certificate") {
        if (!have_target) {
          bad(l, "witness-certificate needs the target first");
        }
        ++i;
        m.witness_certificate = parse_factors(lines, i, m.target);
      } else if (l.keyword == "retraction") {
        if (!have_target) {
          bad(l, "retraction needs the target first");
        }
        Alphabet onto = alphabet_of(l);
        ++i;
        auto images = parse_images(lines, i, m.target.alphabet, onto);
        m.retractions.emplace_back(m.target.alphabet, onto, std::move(images));
      } else {
        bad(l, "unexpected '" + l.keyword + "'");
      }
    }
    if (!have_source || !have_target || !have_images) {
      throw input_error("map file needs source, target and images");
    }
    if (!m.certificates.empty() && m.certificates.size() != m.source.relators.size()) {
      throw input_error("one certificate per source relator");
    }
    return m;
  }

  SurfacePresentation parse_surface_type(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw input_error("surface is given as g,b");
    }
    try {
      std::size_t p1 = 0, p2 = 0;
      auto        gs = text.substr(0, comma), bs = text.substr(comma + 1);
      int         g  = std::stoi(gs, &p1);
      int         b  = std::stoi(bs, &p2);
      if (p1 != gs.size() || p2 != bs.size() || g < 0 || b < 0) {
        throw input_error("surface is given as g,b with g, b >= 0");
      }
      return build_surface(g, b);
    } catch (const std::logic_error&) {
      throw input_error("surface is given as g,b with g, b >= 0");
    }
  }

  std::string write_rep(const ExactRep& r) { return rep_text(r, "exact"); }
  std::string write_rep(const NumRep& r) { return rep_text(r, "double"); }
  std::string write_rep(const WideRep& r) { return rep_text(r, "binary128"); }

  AnyRep read_rep(const std::string& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw input_error(std::string("representation is not JSON: ") + e.what());
    }
    try {
      auto     names  = j.at("alphabet").get<std::vector<std::string>>();
      auto     scalar = j.at("scalar").get<std::string>();
      auto     images = j.at("images");
      Alphabet a(names);
      if (scalar == "exact") {
        return rep_from<QuadNumber>(images, a, exact_entry);
      }
      if (scalar == "double") {
        return rep_from<cplx>(images, a, double_entry);
      }
      if (scalar == "binary128") {
        return rep_from<wcplx>(images, a, wide_entry);
      }
      throw input_error("unknown scalar kind '" + scalar + "'");
    } catch (const json::exception& e) {
      throw input_error(std::string("malformed representation: ") + e.what());
    }
  }

}  // namespace slw
