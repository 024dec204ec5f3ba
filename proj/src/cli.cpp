#include "jumpkit/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jumpkit/errors.hpp"
#include "jumpkit/harness.hpp"
#include "jumpkit/result_table.hpp"

namespace jumpkit {

namespace {

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
    std::string format = "csv";
};

// subcommand -> experiment kind
const std::vector<std::pair<std::string, std::string>> commands{
    {"jump-count", "jump-count"},     {"variation", "variation"},
    {"jump-seminorm", "jump-seminorm"}, {"lewko", "lewko"},
    {"sweep-dim", "dimension-sweep"}, {"vdc", "vdc-sweep"},
    {"boundary", "boundary-measure"}, {"symbols", "symbol-envelope"},
    {"jump-corpus", "jump-corpus"},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read config: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& err) {
    CLI::App app{"Jump counts, variation seminorms and the averaging-operator experiments", "jumpkit"};
    app.set_version_flag("--version", JUMPKIT_VERSION);
    app.require_subcommand(1);
    Options opt;
    std::string chosen;
    for (const auto& [name, kind] : commands) {
        auto* sub = app.add_subcommand(name, "run a " + kind + " config");
        sub->add_option("--config", opt.config, "JSON config file")->required();
        sub->add_option("--seed", opt.seed, "seed overriding the config's");
        sub->add_option("--out", opt.out, "output path, - for stdout");
        sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->callback([&chosen, k = kind] { chosen = k; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_invalid_config;
    }

    try {
        auto config = parse_experiment_config(chosen, read_file(opt.config), opt.seed);
        auto table = run_experiment(config);
        emit_report(table, parse_format(opt.format), opt.out);
    } catch (const InvalidArgument& e) {
        err << "invalid config: " << e.what() << '\n';
        return exit_invalid_config;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric_failure;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_ok;
}

}  // namespace jumpkit
