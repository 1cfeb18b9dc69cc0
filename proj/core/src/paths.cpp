#include "pignose/paths.hpp"

#include <cctype>

#include "pignose/errors.hpp"

namespace pignose {

namespace {

StepDir dir_of_type(int type) {
    if (type == 1 || type == 2) return StepDir::Up;
    if (type == 7 || type == 8) return StepDir::Down;
    return StepDir::Level;
}

int height_delta(StepDir d) { return d == StepDir::Up ? 1 : d == StepDir::Down ? -1 : 0; }

// Inclusive upper bound for the index of a typed step whose lower height is h.
int index_bound(int type, int h) {
    if (type == 5 || type == 6) return h - 1;
    return h;
}

MultiPoly typed_weight(int type, int h, int index) {
    switch (type) {
        case 1: return MultiPoly::q(index);
        case 2: return MultiPoly::monomial({1, 1, h + 1 + index});
        case 3: return MultiPoly::monomial({2, 0, index});
        case 4: return MultiPoly::monomial({1, 1, h + index});
        case 5: return MultiPoly::q(index);
        case 6: return MultiPoly::monomial({1, 1, h + index});
        case 7: return MultiPoly::monomial({2, 0, index});
        default: return MultiPoly::monomial({1, 1, h + index});
    }
}

}  // namespace

std::vector<int> LabeledMotzkinPath::validate() const {
    std::vector<int> heights;
    heights.reserve(steps.size());
    int h = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const PathStep& s = steps[k];
        if (s.type < 1 || s.type > 8) throw InvalidPathError("step type must be 1..8");
        if (dir_of_type(s.type) != s.dir) throw InvalidPathError("direction does not match type");
        heights.push_back(h);
        int low = s.dir == StepDir::Down ? h - 1 : h;
        if (low < 0) throw InvalidPathError("path dips below height 0");
        if (s.index < 0 || s.index > index_bound(s.type, low))
            throw InvalidPathError("index out of range for type " + std::to_string(s.type) +
                                   " at height " + std::to_string(low));
        h += height_delta(s.dir);
    }
    if (h != 0) throw InvalidPathError("path does not end at height 0");
    return heights;
}

std::vector<MultiPoly> LabeledMotzkinPath::step_weights() const {
    std::vector<int> heights = validate();
    std::vector<MultiPoly> w;
    w.reserve(steps.size());
    for (std::size_t k = 0; k < steps.size(); ++k) {
        int low = steps[k].dir == StepDir::Down ? heights[k] - 1 : heights[k];
        w.push_back(typed_weight(steps[k].type, low, steps[k].index));
    }
    return w;
}

MultiPoly LabeledMotzkinPath::weight() const {
    MultiPoly total = MultiPoly::one();
    for (const MultiPoly& w : step_weights()) total *= w;
    return total;
}

std::string LabeledMotzkinPath::str() const {
    std::string s;
    for (const PathStep& st : steps) {
        if (!s.empty()) s += ' ';
        s += st.dir == StepDir::Up ? 'U' : st.dir == StepDir::Down ? 'D' : 'L';
        s += std::to_string(st.type) + ":" + std::to_string(st.index);
    }
    return s;
}

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

int parse_index(const std::string& tok, std::size_t at) {
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos || colon + 1 >= tok.size())
        throw ParseError("step token needs ':<index>'", at);
    int v = 0;
    for (std::size_t i = colon + 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("index must be a nonnegative integer", at + i);
        v = v * 10 + (tok[i] - '0');
    }
    return v;
}

}  // namespace

LabeledMotzkinPath LabeledMotzkinPath::parse(const std::string& text) {
    LabeledMotzkinPath p;
    std::size_t at = 0;
    for (const std::string& tok : tokens_of(text)) {
        at = text.find(tok, at);
        if (tok.size() < 4 || (tok[0] != 'U' && tok[0] != 'L' && tok[0] != 'D'))
            throw ParseError("step token must look like U2:0", at);
        if (!std::isdigit(static_cast<unsigned char>(tok[1])))
            throw ParseError("missing step type", at + 1);
        PathStep s;
        s.type = tok[1] - '0';
        s.dir = tok[0] == 'U' ? StepDir::Up : tok[0] == 'D' ? StepDir::Down : StepDir::Level;
        if (s.type < 1 || s.type > 8 || dir_of_type(s.type) != s.dir)
            throw ParseError("direction does not match type", at);
        if (tok[2] != ':') throw ParseError("expected ':'", at + 2);
        s.index = parse_index(tok, at);
        p.steps.push_back(s);
        at += tok.size();
    }
    p.validate();
    return p;
}

std::vector<int> MotzkinSuffix::validate() const {
    if (start_height < 0) throw InvalidPathError("negative starting height");
    std::vector<int> heights;
    heights.reserve(steps.size());
    int h = start_height;
    for (const SuffixStep& s : steps) {
        heights.push_back(h);
        switch (s.dir) {
            case StepDir::Up:
                if (!s.y2) throw InvalidPathError("up steps carry the y^2 factor");
                if (s.index < 0 || s.index > h) throw InvalidPathError("up index out of range");
                break;
            case StepDir::Down:
                if (s.y2) throw InvalidPathError("down steps carry no y^2 factor");
                if (h - 1 < 0) throw InvalidPathError("path dips below height 0");
                if (s.index < 0 || s.index > h - 1)
                    throw InvalidPathError("down index out of range");
                break;
            case StepDir::Level:
                if (s.index < 0 || s.index > (s.y2 ? h : h - 1))
                    throw InvalidPathError("level index out of range");
                break;
        }
        h += height_delta(s.dir);
        if (h < 0) throw InvalidPathError("path dips below height 0");
    }
    if (h != 0) throw InvalidPathError("suffix does not end at height 0");
    return heights;
}

std::vector<MultiPoly> MotzkinSuffix::step_weights() const {
    validate();
    std::vector<MultiPoly> w;
    w.reserve(steps.size());
    for (const SuffixStep& s : steps) w.push_back(MultiPoly::monomial({s.y2 ? 2 : 0, 0, s.index}));
    return w;
}

MultiPoly MotzkinSuffix::weight() const {
    MultiPoly total = MultiPoly::monomial({start_height, start_height, 0});  // (yt)^sh
    for (const MultiPoly& w : step_weights()) total *= w;
    return total;
}

std::string MotzkinSuffix::str() const {
    std::string s = "@" + std::to_string(start_height);
    for (const SuffixStep& st : steps) {
        s += ' ';
        if (st.dir == StepDir::Up)
            s += "u";
        else if (st.dir == StepDir::Down)
            s += "d";
        else
            s += st.y2 ? "ly" : "lq";
        s += ":" + std::to_string(st.index);
    }
    return s;
}

MotzkinSuffix MotzkinSuffix::parse(const std::string& text) {
    auto tokens = tokens_of(text);
    if (tokens.empty() || tokens[0].size() < 2 || tokens[0][0] != '@')
        throw ParseError("suffix must start with '@<height>'", 0);
    MotzkinSuffix p;
    p.start_height = 0;
    for (std::size_t i = 1; i < tokens[0].size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tokens[0][i])))
            throw ParseError("starting height must be a nonnegative integer", i);
        p.start_height = p.start_height * 10 + (tokens[0][i] - '0');
    }
    std::size_t at = 0;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        at = text.find(tok, at + 1);
        SuffixStep s;
        if (tok.rfind("u:", 0) == 0) {
            s.dir = StepDir::Up;
            s.y2 = true;
        } else if (tok.rfind("d:", 0) == 0) {
            s.dir = StepDir::Down;
            s.y2 = false;
        } else if (tok.rfind("ly:", 0) == 0) {
            s.dir = StepDir::Level;
            s.y2 = true;
        } else if (tok.rfind("lq:", 0) == 0) {
            s.dir = StepDir::Level;
            s.y2 = false;
        } else {
            throw ParseError("step token must be u:, d:, ly: or lq:", at);
        }
        s.index = parse_index(tok, at);
        p.steps.push_back(s);
    }
    p.validate();
    return p;
}

void for_each_mn(int n, const std::function<void(const LabeledMotzkinPath&)>& f, int limit) {
    if (n < 0 || n > limit)
        throw LimitExceededError("path enumeration limited to n <= " + std::to_string(limit));
    LabeledMotzkinPath path;
    path.steps.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int h) -> void {
        if (pos == n) {
            if (h == 0) f(path);
            return;
        }
        if (h > n - pos) return;  // cannot return to zero
        for (int type = 1; type <= 8; ++type) {
            StepDir dir = dir_of_type(type);
            int low = dir == StepDir::Down ? h - 1 : h;
            if (low < 0) continue;
            int bound = index_bound(type, low);
            for (int i = 0; i <= bound; ++i) {
                path.steps.push_back({dir, type, i});
                self(self, pos + 1, h + height_delta(dir));
                path.steps.pop_back();
            }
        }
    };
    rec(rec, 0, 0);
}

void for_each_nn(int n, const std::function<void(const MotzkinSuffix&)>& f, int limit) {
    if (n < 0 || n > limit)
        throw LimitExceededError("path enumeration limited to n <= " + std::to_string(limit));
    MotzkinSuffix path;
    path.steps.reserve(static_cast<std::size_t>(n));
    for (int start = 0; start <= n; ++start) {
        path.start_height = start;
        auto rec = [&](auto&& self, int pos, int h) -> void {
            if (pos == n) {
                if (h == 0) f(path);
                return;
            }
            if (h > n - pos) return;
            // up
            for (int i = 0; i <= h; ++i) {
                path.steps.push_back({StepDir::Up, true, i});
                self(self, pos + 1, h + 1);
                path.steps.pop_back();
            }
            // level, both flavors
            for (int i = 0; i <= h; ++i) {
                path.steps.push_back({StepDir::Level, true, i});
                self(self, pos + 1, h);
                path.steps.pop_back();
            }
            for (int i = 0; i + 1 <= h; ++i) {
                path.steps.push_back({StepDir::Level, false, i});
                self(self, pos + 1, h);
                path.steps.pop_back();
            }
            // down
            if (h >= 1)
                for (int i = 0; i <= h - 1; ++i) {
                    path.steps.push_back({StepDir::Down, false, i});
                    self(self, pos + 1, h - 1);
                    path.steps.pop_back();
                }
        };
        rec(rec, 0, start);
    }
}

MultiPoly mn_weight_sum(int n, int limit) {
    MultiPoly acc;
    for_each_mn(n, [&](const LabeledMotzkinPath& p) { acc += p.weight(); }, limit);
    return acc;
}

MultiPoly nn_weight_sum(int n, int limit) {
    MultiPoly acc;
    for_each_nn(n, [&](const MotzkinSuffix& p) { acc += p.weight(); }, limit);
    return acc;
}

LabeledMotzkinPath fv1(const SignedPerm& pi) {
    int n = pi.n();
    std::vector<int> abs_perm(static_cast<std::size_t>(n));
    std::vector<int> pos_of(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        abs_perm[static_cast<std::size_t>(i - 1)] = std::abs(pi.image(i));
        pos_of[static_cast<std::size_t>(std::abs(pi.image(i)))] = i;
    }
    auto abs_at = [&](int i) {  // |pi_i| with pi_0 = 0, pi_{n+1} = n+1
        if (i == 0) return 0;
        if (i == n + 1) return n + 1;
        return abs_perm[static_cast<std::size_t>(i - 1)];
    };

    LabeledMotzkinPath path;
    for (int j = 1; j <= n; ++j) {
        int i = pos_of[static_cast<std::size_t>(j)];
        bool left_bigger = abs_at(i - 1) > j;
        bool right_bigger = abs_at(i + 1) > j;
        bool negative = pi.image(i) < 0;
        int type;
        if (left_bigger && right_bigger) type = negative ? 2 : 1;        // valley: up
        else if (!left_bigger && right_bigger) type = negative ? 4 : 3;  // double ascent: level
        else if (left_bigger && !right_bigger) type = negative ? 6 : 5;  // double descent: level
        else type = negative ? 8 : 7;                                    // peak: down
        path.steps.push_back({dir_of_type(type), type, mot_at(abs_perm, i)});
    }
    path.validate();
    return path;
}

MotzkinSuffix fz1(const SignedPerm& pi) {
    int n = pi.n();
    MotzkinSuffix path;
    path.steps.resize(static_cast<std::size_t>(n));
    std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);  // pi^{-1}(i) for i in [n]
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        int v = pi.map(i);
        if (v > 0) inv[static_cast<std::size_t>(v)] = i;
    }
    for (int i = 1; i <= n; ++i) {
        SuffixStep& s = path.steps[static_cast<std::size_t>(i - 1)];
        int out = pi.map(i);
        int in = inv[static_cast<std::size_t>(i)];
        if (in < i && out < i) s.dir = StepDir::Down;
        else if (in > i && out > i) s.dir = StepDir::Up;
        else s.dir = StepDir::Level;
        s.y2 = out >= i;  // the arc out of i witnesses a flag weak excedance
        s.index = 0;
    }
    // q bookkeeping: both crossing families on the doubled diagram, attributed
    // to the positive index j of the pair.
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (i < j && j <= pi.map(i) && pi.map(i) < pi.map(j))
                path.steps[static_cast<std::size_t>(j - 1)].index++;
            else if (i > j && j > pi.map(i) && pi.map(i) > pi.map(j))
                path.steps[static_cast<std::size_t>(j - 1)].index++;
        }
    }
    // The walk ends at height 0; read the start height off the step profile.
    int delta = 0;
    for (const SuffixStep& s : path.steps) delta += height_delta(s.dir);
    path.start_height = -delta;
    path.validate();
    return path;
}

}  // namespace pignose
