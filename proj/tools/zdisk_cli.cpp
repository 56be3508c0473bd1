// zdisk: decompose disk images into complex Zernike modes and transform them
// with ladder-operator expressions.

#include "zdisk/errors.hpp"
#include "zdisk/operator_parser.hpp"
#include "zdisk/pipeline.hpp"
#include "zdisk/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::pair<std::size_t, std::size_t> parse_size(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw zdisk::UsageError("size must look like WxH, got '" + s + "'");
    try {
        std::size_t a = 0, b = 0;
        const auto w = std::stoul(s.substr(0, x), &a);
        const auto h = std::stoul(s.substr(x + 1), &b);
        if (a != x || b != s.size() - x - 1 || w == 0 || h == 0) throw std::invalid_argument(s);
        return {w, h};
    } catch (const std::logic_error&) {
        throw zdisk::UsageError("size must look like WxH, got '" + s + "'");
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw zdisk::IoError("cannot open " + path + " for writing");
    os << text << '\n';
}

std::string sibling(const std::string& image_path, const std::string& suffix) {
    const auto dot = image_path.find_last_of('.');
    const auto slash = image_path.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? image_path.substr(0, dot) : image_path) + suffix;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex Zernike decomposition and ladder-operator transforms of disk images"};
    app.require_subcommand(1);

    struct {
        std::string image;
        unsigned max_k = 16, max_l = 16;
        std::string out;
        bool intensity = false;
    } analyze_opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "Decompose an image into a coefficient table");
    analyze_cmd->add_option("image", analyze_opts.image, "Input graymap (P2/P5)")->required();
    analyze_cmd->add_option("--max-k", analyze_opts.max_k, "Largest k index")->capture_default_str();
    analyze_cmd->add_option("--max-l", analyze_opts.max_l, "Largest l index")->capture_default_str();
    analyze_cmd->add_option("--out", analyze_opts.out, "Coefficient CSV (stdout if omitted)");
    analyze_cmd->add_flag("--intensity", analyze_opts.intensity, "Pixels are intensities |f|^2");

    struct {
        std::string coeffs;
        std::string size = "256x256";
        std::string out = "synth.pgm";
        bool normalize = false;
        unsigned bits = 16;
    } synth_opts;
    auto* synth_cmd = app.add_subcommand("synthesize", "Render a coefficient table as an image");
    synth_cmd->add_option("coeffs", synth_opts.coeffs, "Coefficient CSV")->required();
    synth_cmd->add_option("--size", synth_opts.size, "Output size WxH")->capture_default_str();
    synth_cmd->add_option("--out", synth_opts.out, "Output graymap")->capture_default_str();
    synth_cmd->add_flag("--normalize", synth_opts.normalize, "Divide by the peak magnitude");
    synth_cmd->add_option("--bits", synth_opts.bits, "Sample depth, 8 or 16")->capture_default_str();

    struct {
        std::string image;
        std::string op;
        double eps = 1e-4;
        std::string out = "out.pgm";
        std::string report;
        std::string coeffs_in, coeffs_out;
        unsigned max_k = 16, max_l = 16;
        bool intensity = false;
        unsigned bits = 16;
    } apply_opts;
    auto* apply_cmd = app.add_subcommand("apply", "Analyze, apply an operator expression, re-synthesize");
    apply_cmd->add_option("image", apply_opts.image, "Input graymap (P2/P5)")->required();
    apply_cmd->add_option("--op", apply_opts.op, "Operator expression, e.g. \"A+ B+\"")->required();
    apply_cmd->add_option("--eps", apply_opts.eps, "Relative tail-energy tolerance")->capture_default_str();
    apply_cmd->add_option("--out", apply_opts.out, "Output graymap")->capture_default_str();
    apply_cmd->add_option("--report", apply_opts.report, "Run report JSON (default <out>.report.json)");
    apply_cmd->add_option("--coeffs-in", apply_opts.coeffs_in, "Input coefficients (default <out>.input.csv)");
    apply_cmd->add_option("--coeffs-out", apply_opts.coeffs_out, "Output coefficients (default <out>.output.csv)");
    apply_cmd->add_option("--max-k", apply_opts.max_k, "Largest k index before truncation")->capture_default_str();
    apply_cmd->add_option("--max-l", apply_opts.max_l, "Largest l index before truncation")->capture_default_str();
    apply_cmd->add_flag("--intensity", apply_opts.intensity, "Pixels are intensities |f|^2");
    apply_cmd->add_option("--bits", apply_opts.bits, "Sample depth, 8 or 16")->capture_default_str();

    struct {
        std::string coeffs;
        std::string out;
    } spectrum_opts;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Energy per radial degree n = k + l");
    spectrum_cmd->add_option("coeffs", spectrum_opts.coeffs, "Coefficient CSV")->required();
    spectrum_cmd->add_option("--out", spectrum_opts.out, "Spectrum CSV")->required();

    struct {
        unsigned max_index = 10;
        double tol = 1e-9;
    } verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Run the numerical self-check suite");
    verify_cmd->add_option("--max-index", verify_opts.max_index, "Largest k and l checked")->capture_default_str();
    verify_cmd->add_option("--tol", verify_opts.tol, "Defect tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            const auto img = zdisk::load_image(analyze_opts.image);
            const auto table = zdisk::analyze_image(img, analyze_opts.max_k, analyze_opts.max_l, analyze_opts.intensity);
            if (analyze_opts.out.empty())
                zdisk::write_csv(std::cout, table);
            else
                zdisk::write_csv(analyze_opts.out, table);
        } else if (*synth_cmd) {
            const auto [w, h] = parse_size(synth_opts.size);
            const auto table = zdisk::read_csv(synth_opts.coeffs);
            auto img = zdisk::render_magnitude(table, w, h);
            const double peak = *std::max_element(img.values().begin(), img.values().end());
            if (synth_opts.normalize && peak > 0.0) {
                std::vector<double> v = img.values();
                for (auto& x : v) x /= peak;
                img = zdisk::DiskImage(w, h, std::move(v));
            }
            zdisk::save_image(synth_opts.out, img, synth_opts.bits);
        } else if (*apply_cmd) {
            const auto op = zdisk::parse_operator(apply_opts.op);
            const auto img = zdisk::load_image(apply_opts.image);
            zdisk::PipelineOptions options;
            options.max_k = apply_opts.max_k;
            options.max_l = apply_opts.max_l;
            options.eps = apply_opts.eps;
            options.intensity = apply_opts.intensity;
            const auto result = zdisk::run_pipeline(img, op, options);
            zdisk::save_image(apply_opts.out, result.output_image, apply_opts.bits);
            zdisk::write_csv(apply_opts.coeffs_in.empty() ? sibling(apply_opts.out, ".input.csv") : apply_opts.coeffs_in,
                             result.input);
            zdisk::write_csv(
                apply_opts.coeffs_out.empty() ? sibling(apply_opts.out, ".output.csv") : apply_opts.coeffs_out,
                result.output);
            write_text(apply_opts.report.empty() ? sibling(apply_opts.out, ".report.json") : apply_opts.report,
                       zdisk::report_json(result));
        } else if (*spectrum_cmd) {
            const auto table = zdisk::read_csv(spectrum_opts.coeffs);
            std::map<unsigned, double> by_degree;
            for (unsigned k = 0; k <= table.max_k(); ++k)
                for (unsigned l = 0; l <= table.max_l(); ++l) by_degree[k + l] += std::norm(table(k, l));
            const double total = table.energy();
            std::ofstream os(spectrum_opts.out);
            if (!os) throw zdisk::IoError("cannot open " + spectrum_opts.out + " for writing");
            os << "n,energy,fraction,cumulative_fraction\n" << std::setprecision(17);
            double cumulative = 0.0;
            for (const auto& [n, e] : by_degree) {
                cumulative += e;
                os << n << ',' << e << ',' << (total > 0 ? e / total : 0.0) << ','
                   << (total > 0 ? cumulative / total : 0.0) << '\n';
            }
            std::cout << "schwartz_norm " << std::setprecision(17) << zdisk::schwartz_norm(table) << '\n';
        } else if (*verify_cmd) {
            const auto results = zdisk::run_verification(verify_opts.max_index, verify_opts.tol);
            std::size_t passed = 0;
            for (const auto& r : results) {
                std::printf("%-36s %s  defect=%.3e  tol=%.1e\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.measured,
                            r.threshold);
                passed += r.passed ? 1 : 0;
            }
            std::printf("%zu passed, %zu failed\n", passed, results.size() - passed);
            return passed == results.size() ? kExitOk : kExitVerification;
        }
    } catch (const zdisk::ParseError& e) {
        std::cerr << "operator parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
