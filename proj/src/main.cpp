#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "tda/io.hpp"
#include "tda/project.hpp"
#include "tda/pyramid.hpp"
#include "tda/svg.hpp"

namespace {

using namespace tda;

// ---- process plumbing -----------------------------------------------------

// exit codes: 0 success, 1 internal, 2 input/parse, 3 precondition, 4 semantic
int exit_code_for(errc c) {
    switch (c) {
        case errc::parse_error:
            return 2;
        case errc::not_injective:
        case errc::dimension_too_high:
        case errc::missing_coordinates:
        case errc::missing_values:
        case errc::missing_zigzag:
        case errc::not_an_inclusion:
        case errc::sub_not_contained:
        case errc::level_hits_vertex:
            return 3;
        case errc::unsupported_conversion:
        case errc::flavor_mismatch:
        case errc::malformed_ep_interval:
        case errc::malformed_interval:
            return 4;
        default:
            return 1;
    }
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(errc::parse_error, "cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot open " + out_path + " for writing");
    out << text;
}

// ---- barcode --------------------------------------------------------------

graded_barcode ordinary_all(const simplicial_complex& K, const vertex_values& f) {
    graded_barcode g;
    g.kind = flavor::ordinary;
    g.critical_values = critical_values(f);
    for (int p = 0; p <= K.dim(); ++p) {
        graded_barcode gp = ordinary_barcode(K, f, p);
        g.entries.insert(g.entries.end(), gp.entries.begin(), gp.entries.end());
    }
    g.canonicalize();
    return g;
}

graded_barcode lzz_all(const complex_file& cf, bool via_pyramid, bool perturb) {
    if (via_pyramid) return ep_to_lzz(extended_barcode_all(cf.K, cf.values, perturb, true));
    if (cf.K.dim() > 1)
        fail(errc::dimension_too_high,
             "exact levelsets zigzag is implemented for graphs; pass --via-pyramid above "
             "dimension 1");
    graded_barcode g;
    g.kind = flavor::lzz;
    g.critical_values = critical_values(cf.values);
    for (int p = 0; p <= 1; ++p) {
        graded_barcode gp = lzz_barcode_graph(cf.K, cf.values, p);
        g.entries.insert(g.entries.end(), gp.entries.begin(), gp.entries.end());
    }
    g.canonicalize();
    return g;
}

graded_barcode zigzag_all(const zigzag_diagram& d) {
    graded_barcode g;
    g.kind = flavor::zigzag;
    for (std::size_t i = 0; i < d.spaces.size(); ++i)
        g.critical_values.push_back(static_cast<value_t>(i));
    int top = 0;
    for (const relative_pair& rp : d.spaces) top = std::max(top, rp.K.dim());
    if (!d.spaces.empty())
        for (int p = 0; p <= top; ++p) {
            graded_barcode gp = zigzag_barcode(d, p);
            g.entries.insert(g.entries.end(), gp.entries.begin(), gp.entries.end());
        }
    g.canonicalize();
    return g;
}

void filter_degree(barcode_file& bf, int degree) {
    auto drop = [degree](auto& entries, auto deg_of) {
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [&](const auto& e) { return deg_of(e) != degree; }),
                      entries.end());
    };
    switch (bf.kind) {
        case flavor::extended:
            drop(bf.extended.entries, [](const ep_entry& e) { return e.itv.degree; });
            break;
        case flavor::blocks:
            drop(bf.blocks.entries, [](const block_entry& e) { return e.degree; });
            break;
        case flavor::strip:
            drop(bf.strip.points, [](const strip_entry& e) { return e.pt.degree; });
            break;
        default:
            drop(bf.graded.entries, [](const bar& b) { return b.degree; });
            break;
    }
}

void cmd_barcode(const std::string& file, const std::string& mode, bool perturb, bool via_pyramid,
                 bool degree_set, int degree, const std::string& out) {
    complex_file cf = parse_complex(read_input(file));
    barcode_file bf;
    if (mode == "zigzag") {
        if (!cf.has_zigzag)
            fail(errc::missing_zigzag, "mode zigzag needs a \"zigzag\" space list in the input");
        bf.kind = flavor::zigzag;
        bf.graded = zigzag_all(cf.zigzag);
    } else {
        if (!cf.has_values) fail(errc::missing_values, "mode " + mode + " needs vertex values");
        if (!perturb && !is_injective(cf.values))
            fail(errc::not_injective,
                 "vertex values are not distinct; pass --perturb to break ties by vertex id");
        if (mode == "ordinary") {
            bf.kind = flavor::ordinary;
            bf.graded = ordinary_all(cf.K, cf.values);
        } else if (mode == "extended") {
            bf.kind = flavor::extended;
            bf.extended = extended_barcode_all(cf.K, cf.values, perturb, true);
        } else {
            bf.kind = flavor::lzz;
            bf.graded = lzz_all(cf, via_pyramid, perturb);
        }
    }
    if (degree_set) filter_degree(bf, degree);
    write_output(out, emit_barcode(bf));
}

// ---- convert --------------------------------------------------------------

strip_diagram strip_of_lzz(const graded_barcode& g) {
    strip_diagram D;
    D.critical_values = g.critical_values;
    for (const bar& b : g.entries) D.points.push_back({psi_inv(b.degree, b.iv), b.mult});
    D.canonicalize();
    return D;
}

void cmd_convert(const std::string& file, const std::string& to, const std::string& out) {
    barcode_file in = parse_barcode(read_input(file));
    const flavor target = to == "lzz"        ? flavor::lzz
                          : to == "extended" ? flavor::extended
                          : to == "blocks"   ? flavor::blocks
                                             : flavor::strip;
    barcode_file bf;
    bf.kind = target;
    if (in.kind == target) {
        bf = in;
    } else if (in.kind == flavor::extended) {
        if (target == flavor::lzz)
            bf.graded = ep_to_lzz(in.extended);
        else if (target == flavor::strip)
            bf.strip = ep_barcode_to_strip(in.extended);
        else
            bf.blocks = lzz_to_blocks(ep_to_lzz(in.extended));
    } else if (in.kind == flavor::lzz) {
        if (target == flavor::extended)
            bf.extended = lzz_to_ep(in.graded);
        else if (target == flavor::blocks)
            bf.blocks = lzz_to_blocks(in.graded);
        else
            bf.strip = strip_of_lzz(in.graded);
    } else if (in.kind == flavor::strip) {
        if (target == flavor::lzz)
            bf.graded = strip_to_lzz(in.strip);
        else if (target == flavor::extended)
            bf.extended = lzz_to_ep(strip_to_lzz(in.strip));
        else
            bf.blocks = lzz_to_blocks(strip_to_lzz(in.strip));
    } else {
        fail(errc::unsupported_conversion,
             std::string(flavor_name(in.kind)) + " barcodes cannot be converted to " + to);
    }
    write_output(out, emit_barcode(bf));
}

// ---- distance -------------------------------------------------------------

void cmd_distance(const std::string& file_a, const std::string& file_b, const std::string& kind,
                  bool degree_set, int degree, const std::string& out) {
    if (file_a == "-" && file_b == "-")
        fail(errc::parse_error, "only one input may come from standard input");
    barcode_file a = parse_barcode(read_input(file_a));
    barcode_file b = parse_barcode(read_input(file_b));
    value_t d = 0;
    if (kind == "blocks") {
        if (a.kind != flavor::blocks || b.kind != flavor::blocks)
            fail(errc::flavor_mismatch, "distance --kind blocks needs two blocks documents");
        if (degree_set) {
            d = bottleneck_blocks(a.blocks, b.blocks, degree);
        } else {
            std::set<int> degrees;
            for (const block_entry& e : a.blocks.entries) degrees.insert(e.degree);
            for (const block_entry& e : b.blocks.entries) degrees.insert(e.degree);
            for (int p : degrees) d = std::max(d, bottleneck_blocks(a.blocks, b.blocks, p));
        }
    } else {
        if (a.kind != flavor::strip || b.kind != flavor::strip)
            fail(errc::flavor_mismatch, "distance --kind strip needs two strip documents");
        if (degree_set)
            fail(errc::unsupported_conversion,
                 "the strip metric is global across degrees; --degree applies to --kind blocks");
        d = bottleneck_strip(a.strip, b.strip);
    }
    char buf[64];
    if (std::isinf(d))
        std::snprintf(buf, sizeof(buf), "inf\n");
    else
        std::snprintf(buf, sizeof(buf), "%.12g\n", d);
    write_output(out, buf);
}

// ---- project --------------------------------------------------------------

double parse_number(const std::string& tok) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad number in --directions: '" + tok + "'");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size())
        fail(errc::parse_error, "bad number in --directions: '" + tok + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

void cmd_project(const std::string& file, const std::string& directions, const std::string& out) {
    complex_file cf = parse_complex(read_input(file));
    if (!cf.has_coordinates)
        fail(errc::missing_coordinates, "project needs vertex coordinates in the input");
    const std::size_t dim = cf.coordinates.empty() ? 2 : cf.coordinates.begin()->second.size();

    std::vector<std::vector<value_t>> dirs;
    if (directions.find(',') == std::string::npos) {
        // A bare count: evenly spaced unit vectors, plane only.
        const double k = parse_number(directions);
        if (k < 0 || k != std::floor(k) || k > 1e6)
            fail(errc::parse_error, "--directions count must be a small non-negative integer");
        if (dim != 2)
            fail(errc::parse_error,
                 "counted directions need planar coordinates; give explicit vectors x,y,z;...");
        dirs = evenly_spaced_directions(static_cast<int>(k));
    } else {
        for (const std::string& part : split(directions, ';')) {
            std::vector<value_t> u;
            for (const std::string& tok : split(part, ',')) u.push_back(parse_number(tok));
            if (u.size() != dim)
                fail(errc::parse_error,
                     "direction has " + std::to_string(u.size()) + " components, coordinates have " +
                         std::to_string(dim));
            double norm = 0;
            for (double x : u) norm += x * x;
            norm = std::sqrt(norm);
            if (!(norm > 0) || !std::isfinite(norm))
                fail(errc::parse_error, "directions must be finite and nonzero");
            for (double& x : u) x /= norm;
            dirs.push_back(u);
        }
    }

    std::vector<ep_barcode> bcs = project_barcodes(cf.K, cf.coordinates, dirs, true);
    write_output(out, emit_projections(dirs, bcs));
}

// ---- plot -----------------------------------------------------------------

void cmd_plot(const std::string& file, const std::string& out) {
    barcode_file bf = parse_barcode(read_input(file));
    write_output(out, render_svg(bf));
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* t = std::getenv("TDA_THREADS")) {
        const int n = std::atoi(t);
        if (n > 0) omp_set_num_threads(n);
    }
#endif

    CLI::App app{
        "barcodes of real-valued simplicial complexes: ordinary, extended, levelsets zigzag, "
        "block and strip representations"};
    app.require_subcommand(1);

    std::string bar_file = "-", bar_mode = "extended", bar_out;
    int bar_degree = 0;
    bool bar_perturb = false, bar_via = false;
    CLI::App* c_bar = app.add_subcommand("barcode", "compute a barcode of a complex");
    c_bar->add_option("file", bar_file, "complex document, or - for standard input");
    c_bar->add_option("--mode", bar_mode, "ordinary | extended | lzz | zigzag (default extended)")
        ->check(CLI::IsMember({"ordinary", "extended", "lzz", "zigzag"}));
    CLI::Option* bar_deg_opt =
        c_bar->add_option("--degree", bar_degree, "keep only this homology degree");
    c_bar->add_flag("--perturb", bar_perturb, "break value ties by vertex id instead of failing");
    c_bar->add_flag("--via-pyramid", bar_via,
                    "compute levelsets zigzag from the extended barcode");
    c_bar->add_option("--out", bar_out, "write here instead of standard output");

    std::string cv_file = "-", cv_to, cv_out;
    CLI::App* c_cv = app.add_subcommand("convert", "convert a barcode between representations");
    c_cv->add_option("file", cv_file, "barcode document, or - for standard input");
    c_cv->add_option("--to", cv_to, "lzz | extended | blocks | strip")
        ->required()
        ->check(CLI::IsMember({"lzz", "extended", "blocks", "strip"}));
    c_cv->add_option("--out", cv_out, "write here instead of standard output");

    std::string di_a, di_b, di_kind, di_out;
    int di_degree = 0;
    CLI::App* c_di = app.add_subcommand("distance", "bottleneck distance between two barcodes");
    c_di->add_option("first", di_a, "barcode document")->required();
    c_di->add_option("second", di_b, "barcode document")->required();
    c_di->add_option("--kind", di_kind, "blocks | strip")
        ->required()
        ->check(CLI::IsMember({"blocks", "strip"}));
    CLI::Option* di_deg_opt = c_di->add_option(
        "--degree", di_degree, "blocks only: this degree instead of the sup over degrees");
    c_di->add_option("--out", di_out, "write here instead of standard output");

    std::string pj_file = "-", pj_dirs = "8", pj_out;
    CLI::App* c_pj =
        app.add_subcommand("project", "extended barcodes of height functions along directions");
    c_pj->add_option("file", pj_file, "complex document with coordinates, or -");
    c_pj->add_option("--directions", pj_dirs,
                     "count of evenly spaced planar directions, or explicit 'x,y;x,y;...'");
    c_pj->add_option("--out", pj_out, "write here instead of standard output");

    std::string pl_file = "-", pl_out;
    CLI::App* c_pl = app.add_subcommand("plot", "render a barcode as SVG");
    c_pl->add_option("file", pl_file, "barcode document, or - for standard input");
    c_pl->add_option("--out", pl_out, "write here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (c_bar->parsed())
            cmd_barcode(bar_file, bar_mode, bar_perturb, bar_via, bar_deg_opt->count() > 0,
                        bar_degree, bar_out);
        else if (c_cv->parsed())
            cmd_convert(cv_file, cv_to, cv_out);
        else if (c_di->parsed())
            cmd_distance(di_a, di_b, di_kind, di_deg_opt->count() > 0, di_degree, di_out);
        else if (c_pj->parsed())
            cmd_project(pj_file, pj_dirs, pj_out);
        else if (c_pl->parsed())
            cmd_plot(pl_file, pl_out);
        return 0;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
