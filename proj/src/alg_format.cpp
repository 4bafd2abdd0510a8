#include "tilt/alg_format.hpp"

#include "tilt/module.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tilt {

const Rep& AlgDocument::module(const std::string& name) const {
    for (auto& [n, m] : modules)
        if (n == name) return m;
    throw std::invalid_argument("no module named '" + name + "'");
}

const TwoTermComplex& AlgDocument::complex(const std::string& name) const {
    for (auto& [n, p] : complexes)
        if (n == name) return p;
    throw std::invalid_argument("no complex named '" + name + "'");
}

Field parse_field(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "Q") return Field::rationals();
    if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f')) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(t.substr(1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == t.size() - 1 && p > 0 && p < (1ul << 32)) return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected Q or F <p>)");
}

namespace {

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

bool is_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '+') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    for (auto& t : out)
        if (t.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    return out;
}

// One term: optional scalar, then arrows or a single vertex idempotent e<k>.
Term parse_term(const Quiver& q, Field f, const std::string& text) {
    std::vector<std::string> factors;
    std::string cur;
    for (char c : text) {
        if (c == '*') {
            factors.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    factors.push_back(trim(cur));
    Term t{Scalar::one(f), {}};
    std::size_t first = 0;
    if (!factors.empty() && !factors[0].empty() && !is_name(factors[0])) {
        std::string s = factors[0];
        if (s.size() > 1 && s[0] == '-' && is_name(s.substr(1))) {
            t.coeff = Scalar::from_int(f, -1);
            factors[0] = s.substr(1);
        } else {
            t.coeff = Scalar::parse(f, s);
            first = 1;
        }
    }
    if (first == factors.size()) throw std::invalid_argument("term '" + text + "' has no path");
    std::vector<int> written;
    bool idempotent = false;
    for (std::size_t i = first; i < factors.size(); ++i) {
        const std::string& w = factors[i];
        int a = q.arrow_index(w);
        if (a >= 0) {
            written.push_back(a);
            continue;
        }
        if (w.size() > 1 && w[0] == 'e' && factors.size() - first == 1) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(w.substr(1), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == w.size() - 1 && v >= 1 && v <= q.n) {
                t.path.src = t.path.tgt = v - 1;
                idempotent = true;
                continue;
            }
        }
        throw std::invalid_argument("unknown arrow '" + w + "'");
    }
    if (idempotent) return t;
    t.path.arrows.assign(written.rbegin(), written.rend());
    for (std::size_t i = 0; i + 1 < t.path.arrows.size(); ++i)
        if (q.arrows[t.path.arrows[i]].tgt != q.arrows[t.path.arrows[i + 1]].src)
            throw std::invalid_argument("'" + text + "' is not a path: " + q.arrows[t.path.arrows[i + 1]].name +
                                        " does not start where " + q.arrows[t.path.arrows[i]].name + " ends");
    t.path.src = q.arrows[t.path.arrows.front()].src;
    t.path.tgt = q.arrows[t.path.arrows.back()].tgt;
    return t;
}

std::vector<int> parse_vertex_list(const std::vector<std::string>& w, int n) {
    std::vector<int> out;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(w[i], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != w[i].size() || v < 1 || v > n)
            throw std::invalid_argument("'" + w[i] + "' is not a vertex between 1 and " + std::to_string(n));
        out.push_back(v - 1);
    }
    return out;
}

std::size_t parse_count(const std::string& s) {
    std::size_t used = 0;
    long long v = -1;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || v < 0) throw std::invalid_argument("'" + s + "' is not a nonnegative integer");
    return static_cast<std::size_t>(v);
}

struct PendingModule {
    std::string name;
    int line = 0;
    std::optional<std::vector<std::size_t>> dim;
    std::vector<std::pair<int, std::vector<std::string>>> maps;  // arrow, entries
    std::vector<int> map_lines;
};

struct PendingComplex {
    std::string name;
    int line = 0;
    std::optional<std::vector<int>> row, col;
    std::vector<std::tuple<int, std::size_t, std::size_t, std::string>> entries;  // line, r, c, text
};

class Parser {
public:
    explicit Parser(std::optional<Field> override) : override_(override) {}

    AlgDocument run(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            std::string body = raw.substr(0, raw.find('#'));
            auto w = words(body);
            if (w.empty()) continue;
            try {
                handle(line, w, body);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(line, e.what());
            }
        }
        finish_block();
        if (!doc_.alg) build(line);
        return std::move(doc_);
    }

private:
    std::optional<Field> override_;
    std::optional<Field> field_;
    int vertices_ = -1;
    Quiver q_;
    std::vector<std::pair<int, std::string>> relations_;
    AlgDocument doc_;
    std::optional<PendingModule> mod_;
    std::optional<PendingComplex> cx_;

    std::string rest_after(const std::string& body, const std::string& key) {
        return trim(body.substr(body.find(key) + key.size()));
    }

    void handle(int line, const std::vector<std::string>& w, const std::string& body) {
        const std::string& key = w[0];
        if (key == "field" || key == "vertices" || key == "arrow" || key == "relation") {
            if (doc_.alg) throw std::invalid_argument("'" + key + "' after the first module or complex");
            if (key == "field") {
                if (field_) throw std::invalid_argument("field declared twice");
                field_ = parse_field(rest_after(body, "field"));
            } else if (key == "vertices") {
                if (w.size() != 2) throw std::invalid_argument("usage: vertices <n>");
                if (vertices_ >= 0) throw std::invalid_argument("vertices declared twice");
                vertices_ = static_cast<int>(parse_count(w[1]));
                q_.n = vertices_;
            } else if (key == "arrow") {
                if (vertices_ < 0) throw std::invalid_argument("arrow before vertices");
                if (w.size() != 4) throw std::invalid_argument("usage: arrow <name> <src> <tgt>");
                if (!is_name(w[1]) || (w[1][0] == 'e' && w[1].size() > 1 && std::isdigit(static_cast<unsigned char>(w[1][1]))))
                    throw std::invalid_argument("bad arrow name '" + w[1] + "'");
                if (q_.arrow_index(w[1]) >= 0) throw std::invalid_argument("arrow '" + w[1] + "' declared twice");
                auto ends = parse_vertex_list({"", w[2], w[3]}, vertices_);
                q_.arrows.push_back({w[1], ends[0], ends[1]});
            } else {
                if (w.size() < 2) throw std::invalid_argument("empty relation");
                relations_.push_back({line, rest_after(body, "relation")});
            }
            return;
        }
        if (key == "module" || key == "complex") {
            if (w.size() != 2 || !is_name(w[1])) throw std::invalid_argument("usage: " + key + " <name>");
            finish_block();
            if (!doc_.alg) build(line);
            for (auto& [n, m] : doc_.modules)
                if (n == w[1]) throw std::invalid_argument("name '" + w[1] + "' used twice");
            for (auto& [n, p] : doc_.complexes)
                if (n == w[1]) throw std::invalid_argument("name '" + w[1] + "' used twice");
            if (key == "module") {
                mod_ = PendingModule{w[1], line, {}, {}, {}};
            } else {
                cx_ = PendingComplex{w[1], line, {}, {}, {}};
            }
            return;
        }
        if (mod_ && (key == "dim" || key == "map")) {
            if (key == "dim") {
                if (mod_->dim) throw std::invalid_argument("dim given twice");
                if (w.size() != static_cast<std::size_t>(vertices_) + 1)
                    throw std::invalid_argument("dim needs " + std::to_string(vertices_) + " entries");
                std::vector<std::size_t> d;
                for (std::size_t i = 1; i < w.size(); ++i) d.push_back(parse_count(w[i]));
                mod_->dim = d;
            } else {
                if (w.size() < 2) throw std::invalid_argument("usage: map <arrow> <entries>");
                int a = q_.arrow_index(w[1]);
                if (a < 0) throw std::invalid_argument("unknown arrow '" + w[1] + "'");
                for (auto& [b, e] : mod_->maps)
                    if (b == a) throw std::invalid_argument("map for '" + w[1] + "' given twice");
                mod_->maps.push_back({a, std::vector<std::string>(w.begin() + 2, w.end())});
                mod_->map_lines.push_back(line);
            }
            return;
        }
        if (cx_ && (key == "row" || key == "col" || key == "entry")) {
            if (key == "row" || key == "col") {
                auto& slot = key == "row" ? cx_->row : cx_->col;
                if (slot) throw std::invalid_argument(key + " given twice");
                slot = parse_vertex_list(w, vertices_);
            } else {
                if (w.size() < 4) throw std::invalid_argument("usage: entry <r> <c> <element>");
                std::size_t r = parse_count(w[1]), c = parse_count(w[2]);
                std::string rest = trim(body.substr(body.find(w[0]) + w[0].size()));
                rest = trim(rest.substr(rest.find(w[1]) + w[1].size()));
                rest = trim(rest.substr(rest.find(w[2]) + w[2].size()));
                cx_->entries.emplace_back(line, r, c, rest);
            }
            return;
        }
        throw std::invalid_argument("unknown key '" + key + "'");
    }

    void build(int line) {
        if (!field_ && !override_) throw ParseError(line, "missing field declaration");
        if (vertices_ < 0) throw ParseError(line, "missing vertices declaration");
        Field f = override_ ? *override_ : *field_;
        std::vector<Relation> rels;
        for (auto& [rl, text] : relations_) {
            try {
                Relation r;
                for (const std::string& t : split_terms(text)) r.push_back(parse_term(q_, f, t));
                for (const Term& t : r)
                    if (t.path.src != r[0].path.src || t.path.tgt != r[0].path.tgt)
                        throw std::invalid_argument("relation mixes paths with different ends");
                rels.push_back(std::move(r));
            } catch (const std::exception& e) {
                throw ParseError(rl, e.what());
            }
        }
        try {
            doc_.alg = build_algebra(q_, rels, f);
        } catch (const std::exception& e) {
            throw ParseError(line, e.what());
        }
    }

    void finish_block() {
        if (mod_) finish_module();
        if (cx_) finish_complex();
    }

    void finish_module() {
        PendingModule m = std::move(*mod_);
        mod_.reset();
        if (!m.dim) throw ParseError(m.line, "module '" + m.name + "' has no dim line");
        const AlgPtr& a = doc_.alg;
        Rep r;
        r.alg = a;
        r.dim = *m.dim;
        for (const Arrow& ar : a->quiver().arrows) r.maps.emplace_back(a->field(), r.dim[ar.tgt], r.dim[ar.src]);
        for (std::size_t i = 0; i < m.maps.size(); ++i) {
            auto& [ai, entries] = m.maps[i];
            Matrix& mat = r.maps[ai];
            if (entries.size() != mat.rows() * mat.cols())
                throw ParseError(m.map_lines[i], "map " + a->quiver().arrows[ai].name + " needs " +
                                                     std::to_string(mat.rows() * mat.cols()) + " entries, got " +
                                                     std::to_string(entries.size()));
            try {
                for (std::size_t k = 0; k < entries.size(); ++k)
                    mat.at(k / mat.cols(), k % mat.cols()) = Scalar::parse(a->field(), entries[k]);
            } catch (const std::exception& e) {
                throw ParseError(m.map_lines[i], e.what());
            }
        }
        try {
            r.validate();
        } catch (const std::exception& e) {
            throw ParseError(m.line, "module '" + m.name + "': " + e.what());
        }
        doc_.modules.emplace_back(m.name, std::move(r));
    }

    void finish_complex() {
        PendingComplex c = std::move(*cx_);
        cx_.reset();
        const AlgPtr& a = doc_.alg;
        TwoTermComplex p = make_complex(a, c.row.value_or(std::vector<int>{}), c.col.value_or(std::vector<int>{}));
        for (auto& [line, r, col, text] : c.entries) {
            if (r < 1 || r > p.minus1.size() || col < 1 || col > p.zero.size())
                throw ParseError(line, "entry (" + std::to_string(r) + "," + std::to_string(col) + ") outside the " +
                                           std::to_string(p.minus1.size()) + "x" + std::to_string(p.zero.size()) +
                                           " matrix");
            Elem x;
            try {
                x = parse_element(a, text);
            } catch (const std::exception& e) {
                throw ParseError(line, e.what());
            }
            const int from = p.zero[col - 1], to = p.minus1[r - 1];
            if (!a->in_corner(x, from, to))
                throw ParseError(line, "entry must be a combination of paths from vertex " + std::to_string(from + 1) +
                                           " to vertex " + std::to_string(to + 1));
            p.entry(col - 1, r - 1) = elem_add(p.entry(col - 1, r - 1), x);
        }
        doc_.complexes.emplace_back(c.name, std::move(p));
    }
};

}  // namespace

Elem parse_element(const AlgPtr& a, const std::string& text) {
    std::string t = trim(text);
    if (t == "0") return a->zero();
    Elem x = a->zero();
    for (const std::string& term : split_terms(t)) {
        Term tm = parse_term(a->quiver(), a->field(), term);
        x = elem_add(x, elem_scale(a->path_elem(tm.path), tm.coeff));
    }
    return x;
}

AlgDocument parse_alg(const std::string& text, std::optional<Field> field_override) {
    return Parser(field_override).run(text);
}

AlgDocument load_alg(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_alg(ss.str(), field_override);
    } catch (const ParseError& e) {
        throw ParseError(e.line, e.detail, path);
    }
}

std::string emit_module(const std::string& name, const Rep& m) {
    std::string s = "module " + name + "\ndim";
    for (auto d : m.dim) s += " " + std::to_string(d);
    s += "\n";
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        s += "map " + arrows[a].name;
        for (const Scalar& x : m.maps[a].data()) s += " " + x.str();
        s += "\n";
    }
    return s;
}

std::string emit_complex(const std::string& name, const TwoTermComplex& p) {
    std::string s = "complex " + name + "\nrow";
    for (int v : p.minus1) s += " " + std::to_string(v + 1);
    s += "\ncol";
    for (int v : p.zero) s += " " + std::to_string(v + 1);
    s += "\n";
    for (std::size_t r = 0; r < p.minus1.size(); ++r)
        for (std::size_t c = 0; c < p.zero.size(); ++c)
            if (!elem_is_zero(p.entry(c, r)))
                s += "entry " + std::to_string(r + 1) + " " + std::to_string(c + 1) + " " +
                     p.alg->elem_str(p.entry(c, r)) + "\n";
    return s;
}

std::string emit_alg(const AlgDocument& doc) {
    const AlgPtr& a = doc.alg;
    const Field f = a->field();
    std::string s = f.is_rational() ? "field Q\n" : "field F " + std::to_string(f.p) + "\n";
    s += "vertices " + std::to_string(a->vertices()) + "\n";
    for (const Arrow& ar : a->quiver().arrows)
        s += "arrow " + ar.name + " " + std::to_string(ar.src + 1) + " " + std::to_string(ar.tgt + 1) + "\n";
    for (const Relation& r : a->relations()) {
        s += "relation ";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += " + ";
            if (!r[i].coeff.is_one()) s += r[i].coeff.str() + "*";
            s += a->path_name(r[i].path);
        }
        s += "\n";
    }
    for (auto& [n, m] : doc.modules) s += "\n" + emit_module(n, m);
    for (auto& [n, p] : doc.complexes) s += "\n" + emit_complex(n, p);
    return s;
}

}  // namespace tilt
