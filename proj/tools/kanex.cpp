#include <kanex/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    CLI::App app{"kanex: finite categories, Kan extensions and algebraic categories"};
    app.require_subcommand(1);

    struct Parsed
    {
        kanex::CommandOptions options;
        std::uint64_t budget = kanex::Budget{}.max_candidates;
        std::vector<std::string> shapes;
    };
    std::map<std::string, Parsed> parsed;

    for (auto & spec : kanex::command_specs()) {
        auto & p = parsed[spec.name];
        auto * sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--in,-i", p.options.inputs, "input .cat file (repeatable)")->check(CLI::ExistingFile);
        sub->add_flag("--json", p.options.json, "print a JSON document");
        sub->add_option("--budget", p.budget, "cap on search spaces")->capture_default_str();
        sub->add_option("--shapes", p.shapes, "limit shapes for the Beck check")->delimiter(',');
        sub->add_flag("--seed-corpus", p.options.seed_corpus, "run on the built-in corpus");
        for (auto & option : spec.options) {
            auto & target = p.options.values[option.name];
            auto * o = sub->add_option("--" + option.name, target, option.help);
            if (! option.repeatable)
                o->expected(1);
        }
        if (! spec.positional.empty())
            sub->add_option(spec.positional, p.options.positional, spec.positional)->required();
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kanex::exit_error;
    }

    auto * sub = app.get_subcommands().front();
    auto & p = parsed.at(sub->get_name());
    p.options.budget.max_candidates = p.budget;
    try {
        if (! p.shapes.empty()) {
            p.options.shapes.clear();
            for (auto & s : p.shapes)
                p.options.shapes.push_back(kanex::parse_shape(s));
        }
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kanex::exit_error;
    }
    for (auto it = p.options.values.begin() ; it != p.options.values.end() ; )
        it = it->second.empty() ? p.options.values.erase(it) : std::next(it);

    auto result = kanex::run_command(sub->get_name(), p.options);
    (result.exit_code == kanex::exit_error && ! p.options.json ? std::cerr : std::cout) << result.output(p.options.json);
    return result.exit_code;
}
