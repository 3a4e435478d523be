#include "tda/io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "tda/pyramid.hpp"

namespace tda {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { fail(errc::parse_error, msg); }

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        long line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n')
                ++line, col = 1;
            else
                ++col;
        }
        throw parse_failure(line, col, "invalid JSON syntax");
    }
}

value_t get_value(const json& j, const std::string& what) {
    if (j.is_number()) return j.get<value_t>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return inf;
        if (s == "-inf") return -inf;
    }
    bad(what + " must be a number or \"inf\"/\"-inf\"");
}

json put_value(value_t v) {
    if (v == inf) return "inf";
    if (v == -inf) return "-inf";
    return v;
}

long get_count(const json& j, const std::string& what, long least) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    const long v = j.get<long>();
    if (v < least) bad(what + " must be at least " + std::to_string(least));
    return v;
}

bool get_flag(const json& e, const std::string& name) {
    if (!e.contains(name) || !e[name].is_boolean()) bad("entry needs boolean \"" + name + "\"");
    return e[name].get<bool>();
}

const json& need(const json& e, const std::string& name) {
    if (!e.contains(name)) bad("entry needs \"" + name + "\"");
    return e.at(name);
}

simplex get_simplex(const json& j, const std::set<index_t>& ids) {
    if (!j.is_array()) bad("a simplex must be an array of vertex ids");
    simplex s;
    for (const auto& jv : j) s.push_back(get_count(jv, "vertex id", 0));
    for (index_t v : s)
        if (!ids.count(v)) bad("simplex references unknown vertex id " + std::to_string(v));
    simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        bad("repeated vertex inside a simplex");
    return s;
}

}  // namespace

complex_file parse_complex(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) bad("top level must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array()) bad("\"vertices\" must be an array");
    if (!j.contains("simplices") || !j["simplices"].is_array()) bad("\"simplices\" must be an array");

    complex_file out;
    std::set<index_t> ids;
    for (const auto& jv : j["vertices"]) {
        if (!jv.is_object() || !jv.contains("id")) bad("each vertex needs an \"id\"");
        const index_t id = get_count(jv["id"], "vertex id", 0);
        if (!ids.insert(id).second) bad("duplicate vertex id " + std::to_string(id));
        const bool hv = jv.contains("value"), hc = jv.contains("coordinates");
        if (hv == hc)
            bad("vertex " + std::to_string(id) + " needs exactly one of \"value\" or \"coordinates\"");
        if (hv) {
            const value_t v = get_value(jv["value"], "\"value\"");
            if (std::isinf(v)) bad("vertex values must be finite");
            out.values[id] = v;
            out.has_values = true;
        } else {
            if (!jv["coordinates"].is_array() || jv["coordinates"].empty())
                bad("\"coordinates\" must be a non-empty array");
            std::vector<value_t> pt;
            for (const auto& jc : jv["coordinates"]) {
                if (!jc.is_number()) bad("coordinates must be numbers");
                pt.push_back(jc.get<value_t>());
            }
            out.coordinates[id] = pt;
            out.has_coordinates = true;
        }
    }
    if (out.has_values && out.has_coordinates) bad("vertices mix \"value\" and \"coordinates\"");
    if (ids.empty()) out.has_values = out.has_coordinates = true;  // vacuously
    std::size_t dim = 0;
    for (const auto& [id, pt] : out.coordinates) {
        if (dim == 0) dim = pt.size();
        if (pt.size() != dim) bad("coordinates differ in dimension");
    }

    std::vector<simplex> top;
    for (index_t id : ids) top.push_back({id});
    for (const auto& js : j["simplices"]) top.push_back(get_simplex(js, ids));
    out.K = build_complex(top);

    if (j.contains("zigzag")) {
        if (!j["zigzag"].is_array()) bad("\"zigzag\" must be an array of simplex lists");
        out.has_zigzag = true;
        for (const auto& jstep : j["zigzag"]) {
            if (!jstep.is_array()) bad("each zigzag step must be an array of simplices");
            std::vector<simplex> step;
            for (const auto& js : jstep) step.push_back(get_simplex(js, ids));
            out.zigzag.spaces.push_back({build_complex(step), {}});
        }
        for (std::size_t e = 0; e + 1 < out.zigzag.spaces.size(); ++e) {
            const auto& a = out.zigzag.spaces[e].K;
            const auto& b = out.zigzag.spaces[e + 1].K;
            if (is_subcomplex(a, b))
                out.zigzag.forward.push_back(true);
            else if (is_subcomplex(b, a))
                out.zigzag.forward.push_back(false);
            else
                fail(errc::not_an_inclusion,
                     "zigzag steps " + std::to_string(e) + " and " + std::to_string(e + 1) +
                         " are not nested either way");
        }
    }
    return out;
}

namespace {

// Canonical closure flags: the EP types carry their interval types, the block
// kinds their region shapes (both closed corners write [lo, hi]).
std::pair<bool, bool> ep_closures(ep_type t) {
    switch (t) {
        case ep_type::ord: return {true, false};
        case ep_type::rel: return {false, true};
        case ep_type::ext_plus: return {true, true};
        case ep_type::ext_minus: return {false, false};
    }
    return {true, false};
}

std::pair<bool, bool> block_closures(block_kind k) {
    switch (k) {
        case block_kind::o: return {false, false};
        case block_kind::co: return {true, false};
        case block_kind::oc: return {false, true};
        case block_kind::c1:
        case block_kind::c2: return {true, true};
    }
    return {false, false};
}

int ep_index_of(const std::vector<value_t>& crit, value_t v) {
    const auto it = std::lower_bound(crit.begin(), crit.end(), v);
    if (it == crit.end() || *it != v) bad(format_value(v) + " is not a critical value");
    return static_cast<int>(it - crit.begin()) + 1;
}

}  // namespace

barcode_file parse_barcode(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) bad("top level must be an object");
    if (!j.contains("flavor") || !j["flavor"].is_string()) bad("\"flavor\" must be a string");
    const std::string fl = j["flavor"].get<std::string>();

    barcode_file out;
    bool known = false;
    for (flavor f : {flavor::ordinary, flavor::extended, flavor::zigzag, flavor::lzz,
                     flavor::blocks, flavor::strip})
        if (fl == flavor_name(f)) out.kind = f, known = true;
    if (!known) bad("unknown flavor \"" + fl + "\"");

    std::vector<value_t> crit;
    if (j.contains("criticalValues")) {
        if (!j["criticalValues"].is_array()) bad("\"criticalValues\" must be an array");
        for (const auto& jc : j["criticalValues"]) {
            if (!jc.is_number()) bad("critical values must be finite numbers");
            crit.push_back(jc.get<value_t>());
        }
        if (!std::is_sorted(crit.begin(), crit.end()) ||
            std::adjacent_find(crit.begin(), crit.end()) != crit.end())
            bad("\"criticalValues\" must be strictly increasing");
    }

    if (!j.contains("entries") || !j["entries"].is_array()) bad("\"entries\" must be an array");
    for (const auto& e : j["entries"]) {
        if (!e.is_object()) bad("each entry must be an object");
        const int degree = static_cast<int>(get_count(need(e, "degree"), "\"degree\"", 0));
        const long mult = e.contains("mult") ? get_count(e.at("mult"), "\"mult\"", 1) : 1;
        const value_t lo = get_value(need(e, "lo"), "\"lo\"");
        const value_t hi = get_value(need(e, "hi"), "\"hi\"");
        const bool lc = get_flag(e, "loClosed"), hc = get_flag(e, "hiClosed");

        switch (out.kind) {
            case flavor::ordinary:
            case flavor::zigzag:
            case flavor::lzz: {
                const interval iv{lo, hi, lc, hc};
                if (!interval_valid(iv)) bad("invalid interval " + iv.to_string());
                out.graded.entries.push_back({degree, iv, mult});
                break;
            }
            case flavor::extended: {
                if (!e.contains("type") || !e["type"].is_string())
                    bad("extended entries need a \"type\"");
                const std::string tn = e["type"].get<std::string>();
                ep_type t = ep_type::ord;
                bool tknown = false;
                for (ep_type c : {ep_type::ord, ep_type::rel, ep_type::ext_plus, ep_type::ext_minus})
                    if (tn == ep_type_name(c)) t = c, tknown = true;
                if (!tknown) bad("unknown entry type \"" + tn + "\"");
                if (std::make_pair(lc, hc) != ep_closures(t))
                    bad("closure flags contradict type " + tn);
                ep_interval itv{t, ep_index_of(crit, lo), ep_index_of(crit, hi), degree};
                try {
                    check_ep_interval(itv, static_cast<int>(crit.size()));
                } catch (const error& err) {
                    bad(err.what());
                }
                out.extended.entries.push_back({itv, mult});
                break;
            }
            case flavor::blocks: {
                if (!e.contains("type") || !e["type"].is_string())
                    bad("blocks entries need a \"type\"");
                const std::string tn = e["type"].get<std::string>();
                block_kind k = block_kind::o;
                bool tknown = false;
                for (block_kind c : {block_kind::o, block_kind::co, block_kind::oc, block_kind::c1,
                                     block_kind::c2})
                    if (tn == block_kind_name(c)) k = c, tknown = true;
                if (!tknown) bad("unknown entry type \"" + tn + "\"");
                if (std::make_pair(lc, hc) != block_closures(k))
                    bad("closure flags contradict type " + tn);
                if (!(lo <= hi) || lo == inf || hi == -inf) bad("block walls out of order");
                if (lo == hi && k != block_kind::c2) bad("only a corner block may be degenerate");
                out.blocks.entries.push_back({degree, block{k, lo, hi}, mult});
                break;
            }
            case flavor::strip: {
                const interval iv{lo, hi, lc, hc};
                if (!interval_valid(iv)) bad("invalid interval " + iv.to_string());
                out.strip.points.push_back({psi_inv(degree, iv), mult});
                break;
            }
        }
    }

    switch (out.kind) {
        case flavor::ordinary:
        case flavor::zigzag:
        case flavor::lzz:
            out.graded.kind = out.kind;
            out.graded.critical_values = crit;
            out.graded.canonicalize();
            break;
        case flavor::extended:
            out.extended.critical_values = crit;
            out.extended.canonicalize();
            break;
        case flavor::blocks:
            out.blocks.canonicalize();
            break;
        case flavor::strip:
            out.strip.critical_values = crit;
            out.strip.canonicalize();
            break;
    }
    return out;
}

std::string emit_complex(const complex_file& c) {
    json j;
    j["vertices"] = json::array();
    for (index_t id : c.K.vertex_ids()) {
        json jv;
        jv["id"] = id;
        if (c.has_values) {
            const auto it = c.values.find(id);
            if (it == c.values.end()) bad("vertex " + std::to_string(id) + " has no value");
            jv["value"] = it->second;
        } else if (c.has_coordinates) {
            const auto it = c.coordinates.find(id);
            if (it == c.coordinates.end())
                bad("vertex " + std::to_string(id) + " has no coordinates");
            jv["coordinates"] = it->second;
        }
        j["vertices"].push_back(jv);
    }
    j["simplices"] = json::array();
    for (int p = 1; p <= c.K.dim(); ++p)
        for (const simplex& s : c.K.by_dim[p]) j["simplices"].push_back(s);
    if (c.has_zigzag) {
        j["zigzag"] = json::array();
        for (const auto& pr : c.zigzag.spaces) {
            json step = json::array();
            for (int p = 0; p <= pr.K.dim(); ++p)
                for (const simplex& s : pr.K.by_dim[p]) step.push_back(s);
            j["zigzag"].push_back(step);
        }
    }
    return j.dump(2) + "\n";
}

static json barcode_json(const barcode_file& b) {
    json j;
    j["flavor"] = flavor_name(b.kind);
    json entries = json::array();

    auto push = [&](int degree, value_t lo, value_t hi, bool lc, bool hc, const char* type,
                    long mult) {
        json e;
        e["degree"] = degree;
        e["lo"] = put_value(lo);
        e["hi"] = put_value(hi);
        e["loClosed"] = lc;
        e["hiClosed"] = hc;
        if (type) e["type"] = type;
        e["mult"] = mult;
        entries.push_back(e);
    };

    switch (b.kind) {
        case flavor::ordinary:
        case flavor::zigzag:
        case flavor::lzz: {
            graded_barcode g = b.graded;
            g.canonicalize();
            j["criticalValues"] = g.critical_values;
            for (const bar& br : g.entries)
                push(br.degree, br.iv.lo, br.iv.hi, br.iv.lo_closed, br.iv.hi_closed, nullptr,
                     br.mult);
            break;
        }
        case flavor::extended: {
            ep_barcode ep = b.extended;
            ep.canonicalize();
            j["criticalValues"] = ep.critical_values;
            for (const ep_entry& e : ep.entries) {
                const auto [lc, hc] = ep_closures(e.itv.type);
                push(e.itv.degree, ep.value(e.itv.i), ep.value(e.itv.j), lc, hc,
                     ep_type_name(e.itv.type), e.mult);
            }
            break;
        }
        case flavor::blocks: {
            block_barcode bb = b.blocks;
            bb.canonicalize();
            j["criticalValues"] = json::array();
            for (const block_entry& e : bb.entries) {
                const auto [lc, hc] = block_closures(e.blk.kind);
                push(e.degree, e.blk.a, e.blk.b, lc, hc, block_kind_name(e.blk.kind), e.mult);
            }
            break;
        }
        case flavor::strip: {
            strip_diagram D = b.strip;
            D.canonicalize();
            j["criticalValues"] = D.critical_values;
            for (const strip_entry& e : D.points) {
                const auto [deg, iv] = interval_of(e.pt);
                push(deg, iv.lo, iv.hi, iv.lo_closed, iv.hi_closed, nullptr, e.mult);
            }
            break;
        }
    }
    j["entries"] = entries;
    return j;
}

std::string emit_barcode(const barcode_file& b) { return barcode_json(b).dump(2) + "\n"; }

std::string emit_projections(const std::vector<std::vector<value_t>>& directions,
                             const std::vector<ep_barcode>& barcodes) {
    if (directions.size() != barcodes.size())
        fail(errc::shape_mismatch, "one direction per barcode");
    json list = json::array();
    for (std::size_t i = 0; i < directions.size(); ++i) {
        barcode_file bf;
        bf.kind = flavor::extended;
        bf.extended = barcodes[i];
        json p;
        p["direction"] = directions[i];
        json bj = barcode_json(bf);
        for (auto& [key, val] : bj.items()) p[key] = val;
        list.push_back(p);
    }
    json root;
    root["projections"] = list;
    return root.dump(2) + "\n";
}

}  // namespace tda
