#include "streamaccel/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <ostream>

namespace streamaccel::cli {

EvalMode parse_mode(const std::string& text)
{
    if (text == "take-last")
        return EvalMode::take_last();
    constexpr std::string_view prefix = "at-index:";
    if (text.starts_with(prefix)) {
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size();
        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(first, last, index);
        if (ec == std::errc() && ptr == last && first != last)
            return EvalMode::at_index(index);
    }
    throw UsageError("invalid --mode '" + text + "' (expected take-last or at-index:<i>)");
}

void validate(const CliConfig& config)
{
    if (config.generator.has_value() == config.input.has_value())
        throw UsageError("exactly one of --generator or --input is required");
    try {
        config.spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (config.digits < 1)
        throw UsageError("--digits must be >= 1");
    const bool needs_terms = config.command == Command::Table || config.mode.is_take_last();
    if (needs_terms && config.generator && !config.terms)
        throw UsageError("--terms is required for a generator input");
    if (config.command == Command::GrowthCoeff && config.terms && config.mode.is_take_last() && *config.terms < 2)
        throw UsageError("growth-coeff needs --terms >= 2");
}

namespace {

void print_report(const AccelerationReport& report, std::ostream& out)
{
    out << report.rendered << '\n';
    out << "terms_used\t" << report.terms_used << '\n';
    out << "digits_stable\t" << report.digits_stable << '\n';
}

int exit_code(const Element& e) { return e.defined() ? 0 : 2; }

int run_table(const CliConfig& config, const NumStream& raw, std::size_t n, std::ostream& out)
{
    NumStream input = take(raw, n);
    NumStream transformed = apply(config.spec, input);
    bool any_defined = false;
    for (std::size_t i = 0; i < *input.extent().length(); ++i) {
        Element t = transformed.at(i);
        any_defined = any_defined || t.defined();
        out << i << '\t' << render_decimal(input.at(i), config.digits) << '\t'
            << render_decimal(t, config.digits) << '\n';
    }
    return any_defined ? 0 : 2;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
        const SequenceSource source =
            config.generator ? SequenceSource::builtin(*config.generator) : SequenceSource::file(*config.input);
        const NumStream raw = source.open();
        const std::size_t n = config.terms ? *config.terms : raw.extent().length().value_or(0);

        EstimateOptions opts;
        opts.digits = config.digits;
        opts.mode = config.mode;
        opts.alignment = config.alignment;

        switch (config.command) {
        case Command::GrowthCoeff: {
            auto report = exp_coeff_ac(config.spec, raw, n, opts);
            print_report(report, out);
            return exit_code(report.estimate);
        }
        case Command::SumSeries: {
            auto report = sum_series_ac(config.spec, raw, n, opts);
            print_report(report, out);
            return exit_code(report.estimate);
        }
        case Command::Accelerate: {
            auto report = accelerate(config.spec, raw, n, opts);
            out << report.rendered << '\n';
            return exit_code(report.estimate);
        }
        case Command::Table:
            return run_table(config, raw, n, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

namespace {

// Raw option text; mapped onto CliConfig once parsing succeeds.
struct OptionText {
    std::string method = "levin";
    std::string kind = "u";
    std::string g_convention = "text";
    std::string mode = "take-last";
    std::string ratio_align = "drop";
};

const std::map<std::string, Method> methods = {{"ealg", Method::EAlg}, {"levin", Method::Levin}};
const std::map<std::string, Kind> kinds = {{"t", Kind::T}, {"u", Kind::U}, {"v", Kind::V}};
const std::map<std::string, GConvention> conventions = {{"text", GConvention::TextFormula},
                                                        {"code", GConvention::CodeFormula}};
const std::map<std::string, RatioAlignment> alignments = {{"drop", RatioAlignment::DropLeadingZeros},
                                                          {"keep", RatioAlignment::KeepPositions}};

template <typename T>
CLI::IsMember choices(const std::map<std::string, T>& table)
{
    std::vector<std::string> keys;
    for (const auto& entry : table)
        keys.push_back(entry.first);
    return CLI::IsMember(keys, CLI::ignore_case);
}

void add_common_options(CLI::App& sub, CliConfig& config, OptionText& text)
{
    sub.add_option("--method", text.method, "Transform family: ealg | levin")
        ->check(choices(methods))
        ->capture_default_str();
    sub.add_option("--kind", text.kind, "Remainder estimate: t | u | v")->check(choices(kinds))->capture_default_str();
    sub.add_option("--order", config.spec.order, "Transform order k")->capture_default_str();
    sub.add_option("--g-convention", text.g_convention, "E-algorithm g base case: text | code")
        ->check(choices(conventions))
        ->capture_default_str();
    sub.add_option("--terms", config.terms, "Number of input terms");
    sub.add_option("--digits", config.digits, "Significant digits to print")->capture_default_str();
    auto* gen = sub.add_option("--generator", config.generator, "Built-in sequence name");
    auto* in = sub.add_option("--input", config.input, "Sequence file, one value per line");
    gen->excludes(in);
    sub.add_option("--mode", text.mode, "take-last | at-index:<i>")->capture_default_str();
    sub.add_option("--ratio-align", text.ratio_align, "Leading-zero rule for ratios: drop | keep")
        ->check(choices(alignments))
        ->capture_default_str();
}

// IsMember has already checked membership ignoring case; keys are lower case.
template <typename T>
T lookup(const std::map<std::string, T>& table, const std::string& text)
{
    return table.at(CLI::detail::to_lower(text));
}

void apply_text(const OptionText& text, CliConfig& config)
{
    config.spec.method = lookup(methods, text.method);
    config.spec.kind = lookup(kinds, text.kind);
    config.spec.g_convention = lookup(conventions, text.g_convention);
    config.alignment = lookup(alignments, text.ratio_align);
    config.mode = parse_mode(text.mode);
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig config;
    OptionText text;

    CLI::App app{"Convergence acceleration over exact rationals"};
    app.name(args.empty() ? "streamaccel" : args.front());
    app.require_subcommand(1);

    std::string names;
    for (auto name : builtin_names())
        names += (names.empty() ? "" : ", ") + std::string(name);
    app.footer("Generators: " + names);

    const std::pair<const char*, Command> commands[] = {
        {"accelerate", Command::Accelerate},
        {"growth-coeff", Command::GrowthCoeff},
        {"sum-series", Command::SumSeries},
        {"table", Command::Table},
    };
    const std::map<std::string, const char*> blurbs = {
        {"accelerate", "Transform the sequence itself and print one element"},
        {"growth-coeff", "Estimate the exponential growth coefficient from successive ratios"},
        {"sum-series", "Sum a series (possibly divergent) from its terms"},
        {"table", "Print index, raw value and transformed value per line"},
    };
    for (const auto& [name, command] : commands) {
        CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
        add_common_options(*sub, config, text);
        sub->callback([&config, command = command] { config.command = command; });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("streamaccel");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        apply_text(text, config);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return run(config, out, err);
}

}  // namespace streamaccel::cli
