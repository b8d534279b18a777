#include "cy/dataset.hpp"

#include <fstream>
#include <sstream>

#include "cy/errors.hpp"

namespace cy {

std::optional<std::string> DatasetRecord::note_value(const std::string& prefix) const {
    for (const auto& n : notes)
        if (n.rfind(prefix, 0) == 0) return n.substr(prefix.size());
    return std::nullopt;
}

namespace {

struct Line {
    int no;
    std::string text;
};

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// meaningful lines only: comments removed, blanks dropped
std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
        ++no;
        size_t h = raw.find('#');
        if (h != std::string::npos) raw.erase(h);
        std::string s = strip(raw);
        if (!s.empty()) out.push_back({no, s});
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

CyopParsed parse_cyop_lines(const std::vector<Line>& lines) {
    size_t at = 0;
    auto need = [&]() -> const Line& {
        if (at >= lines.size()) throw SyntaxError("unexpected end of operator block",
                                                  lines.empty() ? 1 : lines.back().no, 1);
        return lines[at];
    };
    {
        const Line& l = need();
        if (strip(l.text) != "cyop 1")
            throw SyntaxError("expected 'cyop 1' header", l.no, 1);
        ++at;
    }
    std::string id;
    long order = -1, nterms = -1;
    while (at < lines.size()) {
        auto w = split_ws(lines[at].text);
        if (w[0] == "id" && w.size() == 2) { id = w[1]; ++at; }
        else if (w[0] == "order" && w.size() == 2) { order = std::stol(w[1]); ++at; }
        else if (w[0] == "terms" && w.size() == 2) { nterms = std::stol(w[1]); ++at; }
        else break;
    }
    if (order < 0 || nterms < 1)
        throw SyntaxError("missing 'order' or 'terms' line",
                          at < lines.size() ? lines[at].no : 1, 1);
    std::vector<Poly> terms;
    for (long i = 0; i < nterms; ++i) {
        const Line& l = need();
        std::string head = "P" + std::to_string(i) + ":";
        auto w = split_ws(l.text);
        if (w.empty() || w[0] != head)
            throw SyntaxError("expected '" + head + "'", l.no, 1);
        if (static_cast<long>(w.size()) != order + 2)
            throw SyntaxError("expected " + std::to_string(order + 1) +
                              " coefficients on '" + head + "'", l.no, 1);
        std::vector<Rat> c;
        for (size_t j = 1; j < w.size(); ++j) {
            try {
                c.push_back(rat_from_string(w[j]));
            } catch (const std::exception&) {
                throw SyntaxError("bad coefficient '" + w[j] + "'", l.no, 1);
            }
        }
        terms.push_back(Poly(std::move(c)));
        ++at;
    }
    if (at != lines.size())
        throw SyntaxError("unexpected line after operator terms", lines[at].no, 1);
    ThetaOperator op = make_operator(std::move(terms));
    if (op.order() != order)
        throw SyntaxError("declared order " + std::to_string(order) +
                          " but terms have order " + std::to_string(op.order()),
                          lines[0].no, 1);
    return {std::move(op), std::move(id)};
}

} // namespace

CyopParsed parse_cyop(const std::string& text) {
    return parse_cyop_lines(split_lines(text));
}

std::string serialize_cyop(const ThetaOperator& op, const std::string& id) {
    std::ostringstream os;
    os << "cyop 1\n";
    if (!id.empty()) os << "id " << id << "\n";
    os << "order " << op.order() << "\n";
    os << "terms " << op.k() + 1 << "\n";
    for (int i = 0; i <= op.k(); ++i) {
        os << "P" << i << ":";
        for (int j = 0; j <= op.order(); ++j)
            os << " " << rat_to_string(op.term(i).coeff(j));
        os << "\n";
    }
    return os.str();
}

std::vector<DatasetRecord> parse_dataset(const std::string& text) {
    std::vector<DatasetRecord> out;
    std::vector<Line> block;
    auto flush = [&]() {
        if (block.empty()) return;
        std::vector<Line> op_lines;
        std::optional<std::string> formula;
        std::vector<std::pair<long, Rat>> bases;
        std::vector<std::string> notes;
        for (const Line& l : block) {
            if (l.text.rfind("formula:", 0) == 0) {
                formula = strip(l.text.substr(8));
            } else if (l.text.rfind("base ", 0) == 0) {
                auto w = split_ws(l.text);
                if (w.size() != 3) throw SyntaxError("expected 'base <n> <value>'", l.no, 1);
                bases.emplace_back(std::stol(w[1]), rat_from_string(w[2]));
            } else if (l.text.rfind("note ", 0) == 0) {
                notes.push_back(strip(l.text.substr(5)));
            } else {
                op_lines.push_back(l);
            }
        }
        CyopParsed p = parse_cyop_lines(op_lines);
        out.push_back(DatasetRecord{std::move(p.id), std::move(p.op), std::move(formula),
                                    std::move(bases), std::move(notes)});
        block.clear();
    };
    for (const Line& l : split_lines(text)) {
        if (l.text == "---") flush();
        else block.push_back(l);
    }
    flush();
    return out;
}

std::vector<DatasetRecord> load_dataset(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IOError("cannot open dataset file '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_dataset(buf.str());
}

const DatasetRecord& find_record(const std::vector<DatasetRecord>& db,
                                 const std::string& id) {
    for (const auto& r : db)
        if (r.id == id) return r;
    throw IOError("no dataset record with id '" + id + "'");
}

} // namespace cy
