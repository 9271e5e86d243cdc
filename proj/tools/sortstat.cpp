// Command line front end: verify the identity catalogue, compute single
// statistics, print distributions, and apply the bijections.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sortstat/checks.hpp"
#include "sortstat/formulas.hpp"

using namespace sortstat;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + text);
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

RestrictionSequence parse_restriction(const std::string& text) {
    return RestrictionSequence(parse_csv_ints(text));
}

Matching parse_matching_arg(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Matching::from_edges(static_cast<int>(edges.size()), edges);
}

BicoloredMatching parse_bicolored_arg(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::tuple<int, int, Color>> edges;
    for (const auto& e : j) {
        Color c = Color::Red;
        if (e.size() > 2) {
            const std::string letter = e.at(2).get<std::string>();
            if (letter == "b") c = Color::Blue;
            else if (letter != "r") throw UsageError("edge color must be \"r\" or \"b\"");
        }
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), c);
    }
    return BicoloredMatching::from_edges(static_cast<int>(edges.size()), edges);
}

json set_json(const std::set<int>& s) { return json(s); }

json word_json(const std::vector<Transposition>& word) {
    json out = json::array();
    for (const Transposition& t : word) out.push_back({t.i, t.j});
    return out;
}

// ---- per-element statistic registries, shared by `stat` and `dist` ----

json perm_stat(const SignedPermutation& s, const SignedPermutation& base,
               const RestrictionSequence* r, const std::string& name) {
    const SignedPermutation quotient = s.compose(base.inverse());
    if (name == "inv") return inv(s);
    if (name == "maj") return maj(s);
    if (name == "sor") return sor(s);
    if (name == "cyc") return cyc(s);
    if (name == "invB" || name == "inv_B") return inv_B(s);
    if (name == "invD" || name == "inv_D") return inv_D(s);
    if (name == "sorB" || name == "sor_B") return sor_B(s);
    if (name == "sorD" || name == "sor_D") return sor_D(s);
    if (name == "nminB" || name == "nmin_B") return nmin_B(s);
    if (name == "reflB" || name == "refl_B") return refl_length_B(s);
    if (name == "negatives") return s.negatives();
    if (name == "rlminl") return set_json(rlminl_set(s));
    if (name == "lrmaxp") return set_json(lrmaxp_set(s));
    if (name == "cyc_min") return set_json(cyc_min_set(s));
    if (name == "prlminl") return set_json(prlminl_letters(s));
    if (name == "prlminl_positions") return set_json(prlminl_positions(s));
    if (name == "prlminl_prime") return set_json(prlminl_prime_letters(s));
    if (name == "cyc0") return set_json(cyc0_set(s));
    if (name == "cyc1") return set_json(cyc1_set(s));
    if (name == "cyc0_prime") return set_json(cyc0_prime_set(s));
    if (name == "cyc1_prime") return set_json(cyc1_prime_set(s));
    if (name == "cyc_q") return cyc(quotient);
    if (name == "reflB_q" || name == "refl_B_q") return refl_length_B(quotient);
    if (name == "cyc_min_q") return set_json(cyc_min_set(quotient));
    if (name == "cyc0_q") return set_json(cyc0_set(quotient));
    if (name == "cyc1_q") return set_json(cyc1_set(quotient));
    if (name == "cyc0_prime_q") return set_json(cyc0_prime_set(quotient));
    if (name == "cyc1_prime_q") return set_json(cyc1_prime_set(quotient));
    if (name == "sor_r" || name == "sor_rB" || name == "sor_r_B") {
        if (!r) throw UsageError("statistic " + name + " needs --r");
        if (name == "sor_r") return sor_r(s, base, *r);
        return sor_r_B(s, base, *r);
    }
    if (name == "sor_word") return word_json(sor_factorization(s));
    if (name == "sorB_word") return word_json(sor_B_factorization(s));
    if (name == "sorD_word") return word_json(sor_D_factorization(s));
    throw UsageError("unknown permutation statistic: " + name);
}

json matching_stat(const Matching& m, const Matching& base, const std::string& name) {
    if (name == "ne") return arc_relations(m).nestings;
    if (name == "cr") return arc_relations(m).crossings;
    if (name == "al") return arc_relations(m).alignments;
    if (name == "type") return type_of(m).to_string();
    if (name == "long") return set_json(long_set(m));
    if (name == "short") return set_json(short_set(m));
    if (name == "left") return set_json(left_set(m));
    if (name == "w") return json(varphi1_inv(m).second);
    if (name == "sor") return sor(m, base);
    if (name == "cyc") return cyc(m, base);
    if (name == "cyc_set") return set_json(cyc_set(m, base));
    throw UsageError("unknown matching statistic: " + name);
}

json bicolored_stat(const BicoloredMatching& m, const BicoloredMatching& base,
                    const std::string& name) {
    const RefinedCounts c = refined_counts(m);
    if (name == "blue") return c.blue;
    if (name == "mix") return mix(m);
    if (name == "mixp" || name == "mix_prime") return mix_prime(m);
    if (name == "ne_r") return c.ne_red;
    if (name == "ne_b") return c.ne_blue;
    if (name == "cr_r") return c.cr_red;
    if (name == "cr_b") return c.cr_blue;
    if (name == "al_r") return c.al_red;
    if (name == "al_b") return c.al_blue;
    if (name == "ne") return c.nestings();
    if (name == "cr") return c.crossings();
    if (name == "al") return c.alignments();
    if (name == "longr") return set_json(longr_set(m));
    if (name == "longr_prime") return set_json(longr_prime_set(m));
    if (name == "sor") return sor(m, base);
    if (name == "sorp" || name == "sor_prime") return sor_prime(m, base);
    if (name == "cyc0") return set_json(cyc01_sets(m, base).first);
    if (name == "cyc1") return set_json(cyc01_sets(m, base).second);
    if (name == "cyc0_prime") return set_json(cyc0_prime_set(m, base));
    if (name == "cyc1_prime") return set_json(cyc1_prime_set(m, base));
    throw UsageError("unknown bicolored statistic: " + name);
}

json perm_profile(const SignedPermutation& s) {
    StatProfile p;
    if (s.all_positive()) {
        p.scalars["inv"] = inv(s);
        p.scalars["maj"] = maj(s);
        p.scalars["sor"] = sor(s);
        p.scalars["cyc"] = cyc(s);
        p.sets["rlminl"] = rlminl_set(s);
        p.sets["lrmaxp"] = lrmaxp_set(s);
        p.sets["cyc_min"] = cyc_min_set(s);
    }
    p.scalars["invB"] = inv_B(s);
    p.scalars["sorB"] = sor_B(s);
    p.scalars["nminB"] = nmin_B(s);
    p.scalars["reflB"] = refl_length_B(s);
    p.scalars["negatives"] = s.negatives();
    p.sets["prlminl"] = prlminl_letters(s);
    p.sets["cyc0"] = cyc0_set(s);
    p.sets["cyc1"] = cyc1_set(s);
    if (s.even_signed()) {
        p.scalars["invD"] = inv_D(s);
        p.scalars["sorD"] = sor_D(s);
    }
    return json(p);
}

json matching_profile(const Matching& m, const Matching& base) {
    StatProfile p;
    const ArcRelationCounts c = arc_relations(m);
    p.scalars["ne"] = c.nestings;
    p.scalars["cr"] = c.crossings;
    p.scalars["al"] = c.alignments;
    p.scalars["sor"] = sor(m, base);
    p.scalars["cyc"] = cyc(m, base);
    p.sets["long"] = long_set(m);
    p.sets["short"] = short_set(m);
    p.sets["left"] = left_set(m);
    p.sets["cyc_set"] = cyc_set(m, base);
    return json(p);
}

json bicolored_profile(const BicoloredMatching& m, const BicoloredMatching& base) {
    StatProfile p;
    const RefinedCounts c = refined_counts(m);
    p.scalars["blue"] = c.blue;
    p.scalars["mix"] = mix(m);
    p.scalars["mixp"] = mix_prime(m);
    p.scalars["ne"] = c.nestings();
    p.scalars["cr"] = c.crossings();
    p.scalars["al"] = c.alignments();
    p.scalars["sor"] = sor(m, base);
    p.scalars["sorp"] = sor_prime(m, base);
    const auto [c0, c1] = cyc01_sets(m, base);
    p.sets["longr"] = longr_set(m);
    p.sets["cyc0"] = c0;
    p.sets["cyc1"] = c1;
    return json(p);
}

void print_stat(const json& value) {
    if (value.is_number_integer())
        std::printf("%lld\n", value.get<long long>());
    else
        std::printf("%s\n", value.dump().c_str());
}

// ---- manual flag walk for the subcommands whose values may start with '-' ----

struct TokenArgs {
    std::vector<std::string> positionals;
    std::map<std::string, std::string> flags;
    std::set<std::string> switches;
};

TokenArgs walk_tokens(const std::vector<std::string>& tokens,
                      const std::set<std::string>& value_flags,
                      const std::set<std::string>& bare_flags) {
    TokenArgs out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) == 0) {
            const std::size_t eq = tok.find('=');
            std::string name = tok.substr(2, eq == std::string::npos ? eq : eq - 2);
            if (bare_flags.count(name) && eq == std::string::npos) {
                out.switches.insert(name);
            } else if (value_flags.count(name)) {
                if (eq != std::string::npos) {
                    out.flags[name] = tok.substr(eq + 1);
                } else {
                    if (i + 1 >= tokens.size()) throw UsageError("--" + name + " needs a value");
                    out.flags[name] = tokens[++i];
                }
            } else {
                throw UsageError("unknown option: " + tok);
            }
        } else {
            out.positionals.push_back(tok);
        }
    }
    return out;
}

// ---- stat ----

int run_stat(const std::vector<std::string>& tokens) {
    TokenArgs args = walk_tokens(tokens, {"base", "r"}, {});
    if (args.positionals.size() != 3)
        throw UsageError("usage: stat <perm|sperm|matching|bicolored> <object> <statistic>");
    const std::string& family = args.positionals[0];
    const std::string& object = args.positionals[1];
    const std::string& name = args.positionals[2];

    if (family == "perm" || family == "sperm") {
        SignedPermutation s = SignedPermutation::parse(object);
        SignedPermutation base = args.flags.count("base")
                                     ? SignedPermutation::parse(args.flags.at("base"))
                                     : SignedPermutation::identity(s.size());
        RestrictionSequence r(std::vector<int>{});
        bool has_r = args.flags.count("r") > 0;
        if (has_r) r = parse_restriction(args.flags.at("r"));
        if (name == "profile") {
            std::printf("%s\n", json(perm_profile(s)).dump().c_str());
            return 0;
        }
        print_stat(perm_stat(s, base, has_r ? &r : nullptr, name));
        return 0;
    }
    if (family == "matching") {
        Matching m = parse_matching_arg(object);
        Matching base = args.flags.count("base") ? parse_matching_arg(args.flags.at("base"))
                                                 : nonnesting_matching(type_of(m));
        if (type_of(base) != type_of(m)) throw UsageError("base has a different type");
        if (name == "profile") {
            std::printf("%s\n", matching_profile(m, base).dump().c_str());
            return 0;
        }
        print_stat(matching_stat(m, base, name));
        return 0;
    }
    if (family == "bicolored") {
        BicoloredMatching m = parse_bicolored_arg(object);
        BicoloredMatching base =
            args.flags.count("base")
                ? parse_bicolored_arg(args.flags.at("base"))
                : BicoloredMatching::all_red(nonnesting_matching(type_of(m.base())));
        if (type_of(base.base()) != type_of(m.base())) throw UsageError("base has a different type");
        if (name == "profile") {
            std::printf("%s\n", bicolored_profile(m, base).dump().c_str());
            return 0;
        }
        print_stat(bicolored_stat(m, base, name));
        return 0;
    }
    throw UsageError("unknown family: " + family);
}

// ---- dist ----

Monomial stat_monomial(const std::vector<std::pair<std::string, std::string>>& assignments,
                       const std::function<json(const std::string&)>& eval) {
    Monomial mono;
    for (const auto& [var_token, stat_name] : assignments) {
        json value = eval(stat_name);
        if (var_token == "ti" || var_token == "si") {
            if (!value.is_array())
                throw UsageError(var_token + " needs a set valued statistic, got " + stat_name);
            std::set<int> s;
            for (const auto& v : value) s.insert(v.get<int>());
            mono.times_indexed(var_token == "ti" ? Variable::Kind::TIdx : Variable::Kind::SIdx, s);
        } else {
            Variable v = Variable::parse(var_token);
            int e = value.is_array() ? static_cast<int>(value.size()) : value.get<int>();
            mono.times(v, e);
        }
    }
    return mono;
}

std::vector<std::pair<std::string, std::string>> parse_stats_list(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& piece : [&] {
             std::vector<std::string> ps;
             std::size_t pos = 0;
             while (pos <= text.size()) {
                 std::size_t comma = text.find(',', pos);
                 if (comma == std::string::npos) comma = text.size();
                 ps.push_back(text.substr(pos, comma - pos));
                 pos = comma + 1;
                 if (comma == text.size()) break;
             }
             return ps;
         }()) {
        const std::size_t eq = piece.find('=');
        if (eq == std::string::npos) throw UsageError("--stats entries look like var=stat");
        out.emplace_back(piece.substr(0, eq), piece.substr(eq + 1));
    }
    if (out.empty()) throw UsageError("--stats is empty");
    return out;
}

int run_dist(const std::string& family, const std::string& r_text, int n_flag,
             const std::string& path_text, const std::string& stats_text,
             const std::string& base_text, const std::string& format) {
    const auto assignments = parse_stats_list(stats_text);
    SparsePolynomial total;
    long long count = 0;
    json source;

    auto add = [&](const std::function<json(const std::string&)>& eval) {
        total.add_term(stat_monomial(assignments, eval), 1);
        ++count;
    };

    if (family == "Sr" || family == "Br" || family == "Dr") {
        RestrictionSequence r =
            !r_text.empty() ? parse_restriction(r_text)
                            : (n_flag >= 0 ? RestrictionSequence::full(n_flag)
                                           : throw UsageError(family + " needs --r or --n"));
        source = r;
        SignedPermutation base = !base_text.empty() ? SignedPermutation::parse(base_text)
                                                    : SignedPermutation::identity(r.size());
        auto visit = [&](const SignedPermutation& s) {
            add([&](const std::string& name) { return perm_stat(s, base, &r, name); });
        };
        if (family == "Sr") for_each_Sr(r, visit);
        else if (family == "Br") for_each_Br(r, visit);
        else for_each_Dr(r, visit);
    } else if (family == "matchings") {
        DyckPath d = !path_text.empty() ? DyckPath::parse(path_text)
                                        : dyck_from_restriction(parse_restriction(r_text));
        source = d;
        Matching base = !base_text.empty() ? parse_matching_arg(base_text) : nonnesting_matching(d);
        for_each_matching(d, [&](const Matching& m) {
            add([&](const std::string& name) { return matching_stat(m, base, name); });
        });
    } else if (family == "bicolored" || family == "bicolored-even") {
        DyckPath d = !path_text.empty() ? DyckPath::parse(path_text)
                                        : dyck_from_restriction(parse_restriction(r_text));
        source = d;
        BicoloredMatching base = !base_text.empty()
                                     ? parse_bicolored_arg(base_text)
                                     : BicoloredMatching::all_red(nonnesting_matching(d));
        auto visit = [&](const BicoloredMatching& m) {
            add([&](const std::string& name) { return bicolored_stat(m, base, name); });
        };
        if (family == "bicolored") for_each_bicolored(d, visit);
        else for_each_bicolored_even(d, visit);
    } else {
        throw UsageError("unknown family: " + family);
    }

    if (format == "text") {
        std::printf("%s\n", total.to_string().c_str());
    } else {
        json out = {{"family", family}, {"source", source}, {"size", count},
                    {"polynomial", total}};
        std::printf("%s\n", out.dump().c_str());
    }
    return 0;
}

// ---- map ----

int run_map(const std::vector<std::string>& tokens) {
    TokenArgs args = walk_tokens(
        tokens, {"path", "w", "eps", "r", "perm", "matching", "base"}, {"roundtrip"});
    if (args.positionals.size() != 1)
        throw UsageError(
            "usage: map <varphi1|phi1|varphi2|phi2|f_r|g_r>[-inv] [options]");
    std::string name = args.positionals[0];
    bool inverse = false;
    for (const char* suffix : {"-inv", "_inv"}) {
        const std::string s(suffix);
        if (name.size() > s.size() && name.compare(name.size() - s.size(), s.size(), s) == 0) {
            inverse = true;
            name = name.substr(0, name.size() - s.size());
        }
    }
    const bool roundtrip = args.switches.count("roundtrip") > 0;

    auto need = [&](const std::string& flag) -> const std::string& {
        auto it = args.flags.find(flag);
        if (it == args.flags.end()) throw UsageError(name + " needs --" + flag);
        return it->second;
    };
    auto finish = [&](const json& image, bool roundtrip_ok) {
        if (roundtrip) {
            json out = {{"image", image}, {"roundtrip", roundtrip_ok}};
            std::printf("%s\n", out.dump().c_str());
            return roundtrip_ok ? 0 : 1;
        }
        std::printf("%s\n", image.dump().c_str());
        return 0;
    };

    if (name == "varphi1") {
        if (!inverse) {
            DyckPath d = DyckPath::parse(need("path"));
            std::vector<int> w = parse_csv_ints(need("w"));
            Matching m = varphi1(d, w);
            auto [d2, w2] = varphi1_inv(m);
            return finish(json(m), d2 == d && w2 == w);
        }
        Matching m = parse_matching_arg(need("matching"));
        auto [d, w] = varphi1_inv(m);
        json image = {{"path", d}, {"w", w}};
        return finish(image, varphi1(d, w) == m);
    }
    if (name == "phi1") {
        Matching base = parse_matching_arg(need("base"));
        if (!inverse) {
            std::vector<int> w = parse_csv_ints(need("w"));
            Matching m = phi1(base, w);
            return finish(json(m), phi1_inv(base, m) == w);
        }
        Matching m = parse_matching_arg(need("matching"));
        std::vector<int> w = phi1_inv(base, m);
        return finish(json(w), phi1(base, w) == m);
    }
    if (name == "varphi2") {
        if (!inverse) {
            DyckPath d = DyckPath::parse(need("path"));
            std::vector<int> w = parse_csv_ints(need("w"));
            std::vector<int> eps = parse_csv_ints(need("eps"));
            BicoloredMatching m = varphi2(d, w, eps);
            auto [d2, w2, eps2] = varphi2_inv(m);
            return finish(json(m), d2 == d && w2 == w && eps2 == eps);
        }
        BicoloredMatching m = parse_bicolored_arg(need("matching"));
        auto [d, w, eps] = varphi2_inv(m);
        json image = {{"path", d}, {"w", w}, {"eps", eps}};
        return finish(image, varphi2(d, w, eps) == m);
    }
    if (name == "phi2") {
        BicoloredMatching base = parse_bicolored_arg(need("base"));
        if (!inverse) {
            std::vector<int> w = parse_csv_ints(need("w"));
            std::vector<int> eps = parse_csv_ints(need("eps"));
            BicoloredMatching m = phi2(base, w, eps);
            auto [w2, eps2] = phi2_inv(base, m);
            return finish(json(m), w2 == w && eps2 == eps);
        }
        BicoloredMatching m = parse_bicolored_arg(need("matching"));
        auto [w, eps] = phi2_inv(base, m);
        json image = {{"w", w}, {"eps", eps}};
        return finish(image, phi2(base, w, eps) == m);
    }
    if (name == "f_r") {
        RestrictionSequence r = parse_restriction(need("r"));
        if (!inverse) {
            SignedPermutation s = SignedPermutation::parse(need("perm"));
            Matching m = f_r(s, r);
            return finish(json(m), f_r_inv(m, r) == s);
        }
        Matching m = parse_matching_arg(need("matching"));
        SignedPermutation s = f_r_inv(m, r);
        return finish(json(s), f_r(s, r) == m);
    }
    if (name == "g_r") {
        RestrictionSequence r = parse_restriction(need("r"));
        if (!inverse) {
            SignedPermutation s = SignedPermutation::parse(need("perm"));
            BicoloredMatching m = g_r(s, r);
            return finish(json(m), g_r_inv(m, r) == s);
        }
        BicoloredMatching m = parse_bicolored_arg(need("matching"));
        SignedPermutation s = g_r_inv(m, r);
        return finish(json(s), g_r(s, r) == m);
    }
    throw UsageError("unknown bijection: " + name);
}

// ---- enumerate ----

int run_enumerate(const std::string& family, const std::string& r_text, int n_flag,
                  const std::string& path_text) {
    auto line = [](const json& j) { std::printf("%s\n", j.dump().c_str()); };
    auto restriction = [&]() -> RestrictionSequence {
        if (!r_text.empty()) return parse_restriction(r_text);
        if (n_flag >= 0) return RestrictionSequence::full(n_flag);
        throw UsageError(family + " needs --r or --n");
    };
    auto path = [&]() -> DyckPath {
        if (!path_text.empty()) return DyckPath::parse(path_text);
        return dyck_from_restriction(restriction());
    };

    if (family == "dyck") {
        if (n_flag < 0) throw UsageError("dyck needs --n");
        for (const DyckPath& d : enumerate_dyck(n_flag)) line(json(d));
    } else if (family == "restrictions") {
        if (n_flag < 0) throw UsageError("restrictions needs --n");
        for (const RestrictionSequence& r : all_restrictions(n_flag)) line(json(r));
    } else if (family == "weights") {
        for (const auto& w : enumerate_weights(path())) line(json(w));
    } else if (family == "matchings") {
        for (const Matching& m : enumerate_matchings(path())) line(json(m));
    } else if (family == "bicolored") {
        for (const BicoloredMatching& m : enumerate_bicolored(path())) line(json(m));
    } else if (family == "bicolored-even") {
        for (const BicoloredMatching& m : enumerate_bicolored_even(path())) line(json(m));
    } else if (family == "Sr") {
        for (const SignedPermutation& s : enumerate_Sr(restriction())) line(json(s));
    } else if (family == "Br") {
        for (const SignedPermutation& s : enumerate_Br(restriction())) line(json(s));
    } else if (family == "Dr") {
        for (const SignedPermutation& s : enumerate_Dr(restriction())) line(json(s));
    } else {
        throw UsageError("unknown family: " + family);
    }
    return 0;
}

// ---- verify ----

int run_verify(std::vector<std::string> ids, int max_n, const std::string& bases,
               const std::string& format, bool serial, bool list) {
    if (list) {
        for (const CheckSpec& spec : check_catalogue())
            std::printf("%-16s n<=%d%s  %s\n", spec.id.c_str(), spec.default_max_n,
                        spec.base_sensitive ? " (base sweep)" : "             ",
                        spec.summary.c_str());
        return 0;
    }
    CheckOptions opts;
    opts.max_n = max_n;
    if (max_n < 0) {
        if (const char* env = std::getenv("SORTSTAT_MAX_N")) {
            try {
                opts.max_n = std::stoi(env);
            } catch (const std::exception&) {
                throw UsageError("SORTSTAT_MAX_N is not a number");
            }
        }
    }
    if (bases == "all") opts.all_bases = true;
    else if (bases != "canonical") throw UsageError("--bases takes all or canonical");

    std::vector<CheckResult> results;
    try {
        results = run_checks(ids, opts, !serial);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool all_passed = true;
    for (const CheckResult& r : results) all_passed = all_passed && r.passed;
    if (format == "json") std::printf("%s\n", report_json(results).dump(2).c_str());
    else std::printf("%s", report_text(results).c_str());
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistics, bijections, and identity checks for matchings and"
                 " restricted signed permutations"};
    app.require_subcommand(1);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run identity checks");
    std::vector<std::string> ids;
    int max_n = -1;
    std::string bases = "canonical", format = "text";
    bool serial = false, list = false;
    cmd_verify->add_option("--check", ids, "check id (repeatable; default all)");
    cmd_verify->add_option("--max-n", max_n, "object size ceiling");
    cmd_verify->add_option("--bases", bases, "all or canonical");
    cmd_verify->add_option("--format", format, "text or json");
    cmd_verify->add_flag("--serial", serial, "run checks one at a time");
    cmd_verify->add_flag("--list", list, "list the catalogue and exit");

    CLI::App* cmd_stat = app.add_subcommand("stat", "one statistic of one object");
    cmd_stat->allow_extras();

    CLI::App* cmd_dist = app.add_subcommand("dist", "distribution polynomial over a family");
    std::string dist_family, dist_r, dist_path, dist_stats, dist_base, dist_format = "json";
    int dist_n = -1;
    cmd_dist->add_option("family", dist_family, "Sr, Br, Dr, matchings, bicolored, bicolored-even")
        ->required();
    cmd_dist->add_option("--r", dist_r, "restriction sequence, comma separated");
    cmd_dist->add_option("--n", dist_n, "shorthand for the full restriction");
    cmd_dist->add_option("--path", dist_path, "Dyck path as a UD string");
    cmd_dist->add_option("--stats", dist_stats, "var=stat list, e.g. q=sor,ti=cyc_min")->required();
    cmd_dist->add_option("--base", dist_base, "base object (family specific)");
    cmd_dist->add_option("--format", dist_format, "json or text");

    CLI::App* cmd_map = app.add_subcommand("map", "apply a bijection");
    cmd_map->allow_extras();

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list a family, one JSON per line");
    std::string enum_family, enum_r, enum_path;
    int enum_n = -1;
    cmd_enum->add_option("family", enum_family,
                         "dyck, restrictions, weights, matchings, bicolored, bicolored-even,"
                         " Sr, Br, Dr")
        ->required();
    cmd_enum->add_option("--r", enum_r, "restriction sequence, comma separated");
    cmd_enum->add_option("--n", enum_n, "size (full restriction for window families)");
    cmd_enum->add_option("--path", enum_path, "Dyck path as a UD string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_verify->parsed()) return run_verify(ids, max_n, bases, format, serial, list);
        if (cmd_stat->parsed()) return run_stat(cmd_stat->remaining());
        if (cmd_dist->parsed())
            return run_dist(dist_family, dist_r, dist_n, dist_path, dist_stats, dist_base,
                            dist_format);
        if (cmd_map->parsed()) return run_map(cmd_map->remaining());
        if (cmd_enum->parsed()) return run_enumerate(enum_family, enum_r, enum_n, enum_path);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
