#include "su12/commands.hpp"

#include "su12/errors.hpp"
#include "su12/git.hpp"
#include "su12/io.hpp"
#include "su12/stability.hpp"
#include "su12/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace su12::cli {

using io::Json;

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

std::string json_text(const Json& j)
{
    return j.dump(2) + "\n";
}

// Writes the report to --output if given, else to `out`.
int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::string& text)
{
    if (!cfg.output) {
        out << text;
        return Success;
    }
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file " << *cfg.output << "\n";
        return UsageError;
    }
    file << text;
    return Success;
}

bool require_theorem_range(const ModuliParams& p, std::ostream& err)
{
    if (p.in_theorem_range()) {
        return true;
    }
    err << "error: |d| < g-1 is required (g = " << p.genus() << ", d = " << p.degree() << ")\n";
    return false;
}

Json inequality(const std::string& lhs, int lhs_value, const std::string& rhs, int rhs_value)
{
    return Json{{"lhs", lhs},
                {"lhs_value", lhs_value},
                {"rhs", rhs},
                {"rhs_value", rhs_value},
                {"strict", lhs_value < rhs_value},
                {"weak", lhs_value <= rhs_value}};
}

} // namespace

int cmd_stability(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const ModuliParams p(cfg.genus, cfg.degree);
    if (cfg.d_beta < 0 || cfg.d_gamma < 0 || cfg.d_beta + cfg.d_gamma > p.zeros()) {
        err << "error: need d_beta, d_gamma >= 0 and d_beta + d_gamma <= 4g-4 = " << p.zeros() << "\n";
        return UsageError;
    }
    Json warnings = Json::array();
    if (!p.in_theorem_range()) {
        const std::string msg = "|d| >= g-1: no stable objects exist in this degree";
        err << "warning: " << msg << "\n";
        warnings.push_back(msg);
    }
    const int d_rest = p.zeros() - cfg.d_beta - cfg.d_gamma;
    const StabilityClass cls = classify_counts(p, cfg.d_beta, cfg.d_gamma);

    if (cfg.format == Format::Csv) {
        std::ostringstream s;
        s << "genus,degree,d_beta,d_gamma,d_rest,beta_bound,gamma_bound,class\n"
          << p.genus() << ',' << p.degree() << ',' << cfg.d_beta << ',' << cfg.d_gamma << ',' << d_rest << ','
          << p.beta_bound() << ',' << p.gamma_bound() << ',' << to_string(cls) << "\n";
        return emit(cfg, out, err, s.str());
    }
    Json report{{"command", "stability"},
                {"genus", p.genus()},
                {"degree", p.degree()},
                {"N", p.zeros()},
                {"d_beta", cfg.d_beta},
                {"d_gamma", cfg.d_gamma},
                {"d_rest", d_rest},
                {"class", std::string(to_string(cls))},
                {"inequalities",
                 Json::array({inequality("d_beta", cfg.d_beta, "2(g-1-d)", p.beta_bound()),
                              inequality("d_gamma", cfg.d_gamma, "2(g-1+d)", p.gamma_bound())})},
                {"warnings", warnings}};
    return emit(cfg, out, err, json_text(report));
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const ModuliParams p(cfg.genus, cfg.degree);
    if (!require_theorem_range(p, err)) {
        return UsageError;
    }
    const Census c = census(p);
    const std::map<std::string, mpz_class> totals{{"Stable", c.stable_total},
                                                  {"StrictlyPolystable", c.strictly_polystable_total},
                                                  {"SemistableNotPolystable", c.semistable_not_polystable_total},
                                                  {"Unstable", c.unstable_total}};
    if (cfg.format == Format::Csv) {
        std::ostringstream s;
        s << "d_beta,d_gamma,d_rest,class,labeled_count,stratum_dimension\n";
        for (const auto& row : c.rows) {
            s << row.d_beta << ',' << row.d_gamma << ',' << row.d_rest << ',' << to_string(row.cls) << ','
              << row.labeled_count.get_str() << ','
              << (row.stratum_dimension ? std::to_string(*row.stratum_dimension) : "") << "\n";
        }
        for (const auto& name : {"Stable", "StrictlyPolystable", "SemistableNotPolystable", "Unstable"}) {
            s << "total,,," << name << ',' << totals.at(name).get_str() << ",\n";
        }
        s << "total,,,All," << c.total().get_str() << ",\n";
        return emit(cfg, out, err, s.str());
    }
    Json rows = Json::array();
    for (const auto& row : c.rows) {
        rows.push_back(Json{{"d_beta", row.d_beta},
                            {"d_gamma", row.d_gamma},
                            {"d_rest", row.d_rest},
                            {"class", std::string(to_string(row.cls))},
                            {"labeled_count", io::to_json(row.labeled_count)},
                            {"stratum_dimension", row.stratum_dimension ? Json(*row.stratum_dimension) : Json()}});
    }
    Json report{{"command", "census"},
                {"genus", p.genus()},
                {"degree", p.degree()},
                {"N", p.zeros()},
                {"rows", rows},
                {"totals",
                 Json{{"Stable", io::to_json(c.stable_total)},
                      {"StrictlyPolystable", io::to_json(c.strictly_polystable_total)},
                      {"SemistableNotPolystable", io::to_json(c.semistable_not_polystable_total)},
                      {"Unstable", io::to_json(c.unstable_total)},
                      {"All", io::to_json(c.total())}}}};
    return emit(cfg, out, err, json_text(report));
}

int cmd_git_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const ModuliParams p(cfg.genus, cfg.degree);
    if (!require_theorem_range(p, err)) {
        return UsageError;
    }
    if (cfg.r_max < 1) {
        err << "error: --rmax must be at least 1\n";
        return UsageError;
    }
    if (!cfg.input) {
        err << "error: git-classify needs --input\n";
        return UsageError;
    }
    std::ifstream file(*cfg.input, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << *cfg.input << "\n";
        return UsageError;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    std::vector<Configuration> configs;
    try {
        configs = io::parse_configurations(buffer.str());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (configs[i].size() != static_cast<std::size_t>(p.zeros())) {
            err << "error: configuration " << i << " has " << configs[i].size() << " points, expected N = "
                << p.zeros() << "\n";
            return UsageError;
        }
    }

    const LinearizationSpec spec = LinearizationSpec::for_params(p);
    Json results = Json::array();
    std::ostringstream csv;
    csv << "index,base,in_Y,closed_form,bruteforce,agree,representative\n";
    int disagreements = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const Configuration& c = configs[i];
        const GitClass closed = classify_closed_form(c, spec);
        BruteForceResult brute;
        try {
            brute = classify_bruteforce(c, spec, cfg.r_max);
        } catch (const SearchOverflow& e) {
            err << "error: " << e.what() << "\n";
            return UsageError;
        }
        const bool agree = closed == brute.cls;
        if (!agree) {
            ++disagreements;
            err << "oracle disagreement at configuration " << i << ": closed form " << to_string(closed)
                << ", brute force " << to_string(brute.cls) << "\n";
        }
        const Json rep = closed == GitClass::GitUnstable ? Json() : io::to_json(s_equivalence_representative(c, spec));
        const auto& witness = brute.stable_witness ? brute.stable_witness : brute.semistable_witness;
        results.push_back(Json{{"index", i},
                               {"configuration", io::to_json(c)},
                               {"in_Y", in_Y(c, p)},
                               {"closed_form", std::string(to_string(closed))},
                               {"bruteforce", std::string(to_string(brute.cls))},
                               {"agree", agree},
                               {"witness", witness ? io::to_json(*witness) : Json()},
                               {"witness_power", witness ? Json(brute.power) : Json()},
                               {"representative", rep}});
        csv << i << ',' << csv_field(c.base) << ',' << (in_Y(c, p) ? "true" : "false") << ',' << to_string(closed)
            << ',' << to_string(brute.cls) << ',' << (agree ? "true" : "false") << ','
            << (rep.is_null() ? "" : csv_field(rep.dump())) << "\n";
    }

    int rc = Success;
    if (cfg.format == Format::Csv) {
        rc = emit(cfg, out, err, csv.str());
    } else {
        Json report{{"command", "git-classify"},
                    {"genus", p.genus()},
                    {"degree", p.degree()},
                    {"N", p.zeros()},
                    {"n", p.exponent()},
                    {"r_max", cfg.r_max},
                    {"results", results},
                    {"disagreements", disagreements}};
        rc = emit(cfg, out, err, json_text(report));
    }
    if (rc != Success) {
        return rc;
    }
    return disagreements == 0 ? Success : CheckFailure;
}

int cmd_local_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.truncation < 2) {
        err << "error: --truncation must be at least 2\n";
        return UsageError;
    }
    if (cfg.cases < 0) {
        err << "error: --cases must be nonnegative\n";
        return UsageError;
    }
    const VerificationReport report = run_local_verification({cfg.truncation, cfg.seed, cfg.cases, cfg.corrupt});
    for (const auto& c : report.checks) {
        if (!c.passed()) {
            err << "check " << c.name << " failed: " << c.detail << "\n";
        }
    }

    int rc = Success;
    if (cfg.format == Format::Csv) {
        std::ostringstream s;
        s << "check,cases,failures,passed,detail\n";
        for (const auto& c : report.checks) {
            s << c.name << ',' << c.cases << ',' << c.failures << ',' << (c.passed() ? "true" : "false") << ','
              << csv_field(c.detail) << "\n";
        }
        rc = emit(cfg, out, err, s.str());
    } else {
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            checks.push_back(Json{{"name", c.name},
                                  {"cases", c.cases},
                                  {"failures", c.failures},
                                  {"passed", c.passed()},
                                  {"detail", c.detail}});
        }
        Json j{{"command", "local-model-verify"},
               {"truncation", cfg.truncation},
               {"seed", cfg.seed},
               {"cases", cfg.cases},
               {"checks", checks},
               {"passed", report.passed()}};
        rc = emit(cfg, out, err, json_text(j));
    }
    if (rc != Success) {
        return rc;
    }
    return report.passed() ? Success : CheckFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"su12: stability, census, GIT classification and local model checks", "su12"};
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--genus", cfg.genus, "Genus g >= 2")->required();
        sub->add_option("--degree", cfg.degree, "Degree d of L")->required();
    };

    CLI::App* stability = app.add_subcommand("stability", "Classify a partition (d_beta, d_gamma)");
    add_params(stability);
    stability->add_option("--dbeta", cfg.d_beta, "Number of zeros of beta")->required();
    stability->add_option("--dgamma", cfg.d_gamma, "Number of zeros of gamma")->required();
    add_format(stability);

    CLI::App* census_cmd = app.add_subcommand("census", "Labeled partition census with stratum dimensions");
    add_params(census_cmd);
    add_format(census_cmd);

    CLI::App* git = app.add_subcommand("git-classify", "GIT classification of configurations from a JSON file");
    add_params(git);
    git->add_option("--input", cfg.input, "JSON array of configurations")->required();
    git->add_option("--rmax", cfg.r_max, "Largest power r of the line bundle to search");
    add_format(git);

    CLI::App* local = app.add_subcommand("local-model-verify", "Randomized checks of the local Hecke model");
    local->add_option("--truncation", cfg.truncation, "Truncation order T >= 2");
    local->add_option("--seed", cfg.seed, "Random seed");
    local->add_option("--cases", cfg.cases, "Randomized cases per suite");
    local->add_flag("--corrupt", cfg.corrupt, "Inject a phi with det = zeta^2 into the Smith suite");
    add_format(local);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("su12");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }
    cfg.format = format == "csv" ? Format::Csv : Format::Json;

    try {
        if (stability->parsed()) {
            return cmd_stability(cfg, out, err);
        }
        if (census_cmd->parsed()) {
            return cmd_census(cfg, out, err);
        }
        if (git->parsed()) {
            return cmd_git_classify(cfg, out, err);
        }
        return cmd_local_verify(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
}

} // namespace su12::cli
