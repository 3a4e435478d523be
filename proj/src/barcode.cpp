#include "tda/barcode.hpp"

#include <algorithm>
#include <sstream>

namespace tda {

std::string format_value(value_t v) {
    if (v == inf) return "inf";
    if (v == -inf) return "-inf";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string interval::to_string() const {
    std::string s(1, lo_closed ? '[' : '(');
    s += format_value(lo);
    s += ", ";
    s += format_value(hi);
    s += hi_closed ? ']' : ')';
    return s;
}

bool interval_valid(const interval& iv) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi)) return false;
    if (iv.lo_closed && !std::isfinite(iv.lo)) return false;
    if (iv.hi_closed && !std::isfinite(iv.hi)) return false;
    if (iv.lo < iv.hi) return true;
    return iv.lo == iv.hi && iv.lo_closed && iv.hi_closed;
}

void check_ep_interval(const ep_interval& e, int n_critical) {
    if (e.degree < 0) fail(errc::malformed_ep_interval, "negative degree");
    if (e.i < 1 || e.j < 1 || e.i > n_critical || e.j > n_critical)
        fail(errc::malformed_ep_interval,
             "critical index out of range: (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                 ") with " + std::to_string(n_critical) + " critical values");
    const bool strict = e.type != ep_type::ext_plus;
    if (strict ? (e.i >= e.j) : (e.i > e.j))
        fail(errc::malformed_ep_interval, std::string(ep_type_name(e.type)) + " needs i " +
                                              (strict ? "<" : "<=") + " j, got (" +
                                              std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
}

namespace {

template <class Entry, class Key>
void sort_merge(std::vector<Entry>& v, Key key, long Entry::*mult) {
    std::sort(v.begin(), v.end(), [&](const Entry& a, const Entry& b) { return key(a) < key(b); });
    std::vector<Entry> out;
    for (auto& e : v) {
        if (!out.empty() && key(out.back()) == key(e))
            out.back().*mult += e.*mult;
        else
            out.push_back(e);
    }
    std::erase_if(out, [&](const Entry& e) { return e.*mult == 0; });
    v = std::move(out);
}

}  // namespace

void graded_barcode::canonicalize() {
    sort_merge(entries, [](const bar& b) { return b.key(); }, &bar::mult);
}

bool graded_barcode::operator==(const graded_barcode& o) const {
    graded_barcode a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    if (a.kind != b.kind || a.critical_values != b.critical_values) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (a.entries[k].key() != b.entries[k].key() || a.entries[k].mult != b.entries[k].mult)
            return false;
    return true;
}

void ep_barcode::canonicalize() {
    sort_merge(entries, [](const ep_entry& e) { return e.itv.key(); }, &ep_entry::mult);
}

bool ep_barcode::operator==(const ep_barcode& o) const {
    ep_barcode a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    if (a.critical_values != b.critical_values) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (!(a.entries[k].itv == b.entries[k].itv) || a.entries[k].mult != b.entries[k].mult)
            return false;
    return true;
}

void canonicalize(pos_barcode& bc) {
    sort_merge(bc, [](const pos_bar& b) { return b.key(); }, &pos_bar::mult);
}

bool pos_barcode_equal(pos_barcode a, pos_barcode b) {
    canonicalize(a);
    canonicalize(b);
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].key() != b[k].key() || a[k].mult != b[k].mult) return false;
    return true;
}

}  // namespace tda
