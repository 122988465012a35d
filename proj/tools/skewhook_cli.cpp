#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skewhook/commands.hpp"

namespace {

int emit(const skewhook::json& report, bool pretty)
{
    if (pretty)
        std::cout << skewhook::cli::render_pretty(report);
    else
        std::cout << report.dump() << '\n';
    return skewhook::cli::report_ok(report) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace skewhook::cli;

    CLI::App app{"Skew standard Young tableaux: counting, excited diagrams, identities and the insertion bijection"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.fallthrough(); // so --pretty may also follow the subcommand

    CountArgs count;
    auto* c = app.add_subcommand("count", "count standard fillings of lambda/mu");
    c->add_option("--lambda", count.lambda, "outer shape, comma separated (e.g. 7,6,5,5,2,1)")->required();
    c->add_option("--mu", count.mu, "inner shape, comma separated; empty for none");
    c->add_option("--method", count.method, "bruteforce|recursive|naruse|oo|determinant|all");

    ExcitedArgs excited;
    auto* e = app.add_subcommand("excited", "enumerate excited diagrams of lambda/mu");
    e->add_option("--lambda", excited.lambda)->required();
    e->add_option("--mu", excited.mu);

    IdentityArgs identity;
    auto* id = app.add_subcommand("identity", "check the polynomial and numeric identities");
    id->add_option("--lambda", identity.lambda)->required();
    id->add_option("--mu", identity.mu);
    id->add_option("--mode", identity.mode, "polynomial|numeric|both");

    BijectionArgs bij;
    auto* b = app.add_subcommand("bijection", "run the insertion bijection");
    b->add_option("--lambda", bij.lambda, "required for repeated and verify");
    b->add_option("--mu", bij.mu);
    b->add_option("--action", bij.action, "insert|inverse|repeated|verify")->required();
    b->add_option("--tableau", bij.tableau, "JSON rows of {\"v\":n,\"c\":\"B\"|\"R\"} or compact '0B,0R/1B'");
    b->add_option("--var", bij.var, "variable such as y1 or {\"kind\":\"y\",\"index\":1}");
    b->add_flag("--trace", bij.trace, "record every bump");

    SelftestArgs self;
    auto* s = app.add_subcommand("selftest", "exhaustive cross-check over all small shapes");
    s->add_option("--max-cells", self.max_cells, "largest |lambda| swept (at most 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& ok) {
        return app.exit(ok);
    } catch (const CLI::ParseError& err) {
        skewhook::json report = {{"command", argc > 1 ? std::string(argv[1]) : std::string()},
                                 {"status", "error"},
                                 {"message", err.what()}};
        return emit(report, pretty);
    }

    if (c->parsed())
        return emit(run_count(count), pretty);
    if (e->parsed())
        return emit(run_excited(excited), pretty);
    if (id->parsed())
        return emit(run_identity(identity), pretty);
    if (b->parsed())
        return emit(run_bijection(bij), pretty);
    return emit(run_selftest(self), pretty);
}
