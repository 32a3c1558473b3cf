#include "twistlab/configuration.hpp"

#include <fstream>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

CycleConfiguration::CycleConfiguration(SymplecticSpace space, CurveRegistry registry)
    : space_(space), registry_(std::move(registry)) {}

void CycleConfiguration::bind(const std::string& name, HomologyClass cls) {
    if (cls.space() != space_)
        throw DimensionError("class for " + name + " lives in genus " + std::to_string(cls.space().genus()) +
                             ", configuration has genus " + std::to_string(space_.genus()));
    if (auto it = index_.find(name); it != index_.end()) {
        bindings_[it->second].second = std::move(cls);
        return;
    }
    index_[name] = bindings_.size();
    bindings_.emplace_back(name, std::move(cls));
}

bool CycleConfiguration::contains(const std::string& name) const { return index_.count(name) != 0; }

const HomologyClass& CycleConfiguration::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ConfigurationError("unbound symbol: " + name);
    return bindings_[it->second].second;
}

SpMatrix word_matrix(const TwistWord& w, const CycleConfiguration& cfg) {
    SpMatrix m(cfg.space());
    for (const auto& s : w) multiply_by_transvection(m, cfg.class_of(s), s.exponent);
    return m;
}

namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& msg) {
    throw ConfigurationError("configuration line " + std::to_string(line) + ": " + msg);
}

}  // namespace

CycleConfiguration parse_configuration(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    std::optional<CycleConfiguration> cfg;
    bool chain = true;
    std::vector<std::pair<std::size_t, std::string>> pending;

    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "genus") {
            int g = 0;
            if (cfg || !(ls >> g)) bad_line(lineno, "expected a single 'genus <g>' header");
            if (g < 1) bad_line(lineno, "genus must be positive");
            cfg.emplace(SymplecticSpace(g));
        } else if (head == "defaults") {
            std::string mode;
            ls >> mode;
            if (mode != "chain" && mode != "none") bad_line(lineno, "defaults must be chain or none");
            chain = mode == "chain";
        } else if (head == "cycle" || head == "pair") {
            if (!cfg) bad_line(lineno, "'genus' header must come first");
            pending.emplace_back(lineno, raw);
        } else {
            bad_line(lineno, "unknown directive '" + head + "'");
        }
    }
    if (!cfg) throw ConfigurationError("configuration has no 'genus' header");

    CycleConfiguration out(cfg->space(), CurveRegistry(chain));
    const int dim = out.space().dimension();
    for (const auto& [ln, raw] : pending) {
        std::istringstream ls(raw);
        std::string head, a;
        ls >> head >> a;
        if (a.empty()) bad_line(ln, "missing name");
        if (head == "cycle") {
            std::vector<Int> coords;
            Int v;
            while (ls >> v) coords.push_back(v);
            if (!ls.eof()) bad_line(ln, "non-integer coordinate");
            if (static_cast<int>(coords.size()) != dim)
                bad_line(ln, "cycle " + a + " needs " + std::to_string(dim) + " integers");
            if (out.contains(a)) bad_line(ln, "duplicate cycle " + a);
            out.bind(a, HomologyClass(out.space(), std::move(coords)));
        } else {
            std::string b;
            int n = -1;
            if (!(ls >> b >> n) || n < 0) bad_line(ln, "expected 'pair <name> <name> <count>'");
            out.registry().declare(a, b, IntersectionDatum::from_count(n));
        }
    }
    return out;
}

CycleConfiguration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open configuration file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_configuration(ss.str());
}

std::string format_configuration(const CycleConfiguration& cfg, std::string_view header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) {
        std::istringstream hc{std::string(header_comment)};
        std::string line;
        while (std::getline(hc, line)) out << "# " << line << '\n';
    }
    out << "genus " << cfg.space().genus() << '\n';
    if (!cfg.registry().uses_chain_defaults()) out << "defaults none\n";
    for (const auto& [name, cls] : cfg.bindings()) {
        out << "cycle " << name;
        for (auto v : cls.coords()) out << ' ' << v;
        out << '\n';
    }
    for (const auto& [names, d] : cfg.registry().entries())
        out << "pair " << names.first << ' ' << names.second << ' ' << d.count << '\n';
    return out.str();
}

}  // namespace twistlab
