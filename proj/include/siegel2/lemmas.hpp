#pragma once

#include <string>
#include <vector>

#include "siegel2/chars.hpp"

namespace siegel2 {

struct LemmaCheck {
    std::string id;
    bool holds = true;
    long cases = 0;
    std::string detail;  // first counterexample, if any
};

namespace detail {

class LemmaRecorder {
public:
    explicit LemmaRecorder(std::string id) { r_.id = std::move(id); }

    void check(bool ok, const std::string& what)
    {
        ++r_.cases;
        if (!ok && r_.holds) {
            r_.holds = false;
            r_.detail = what;
        }
    }

    LemmaCheck done() { return r_; }

private:
    LemmaCheck r_;
};

inline std::vector<CharSet> members_of(OrbitClass c, const std::vector<CharSet>& pool)
{
    std::vector<CharSet> r;
    for (CharSet s : pool)
        if (classify_set(s) == c)
            r.push_back(s);
    return r;
}

} // namespace detail

// Exhaustive checks of the orbit-calculus statements over their full domains.
inline std::vector<LemmaCheck> verify_orbit_lemmas()
{
    using detail::LemmaRecorder;
    std::vector<LemmaCheck> out;

    const auto pairs = subsets_of_size(2);
    const auto c4m = orbit_members(OrbitClass::C4Minus);
    const auto c6p = orbit_members(OrbitClass::C6Plus);

    {
        LemmaRecorder rec("l1");
        for (CharSet p : pairs) {
            int minus = 0, plus = 0;
            for (int n : p.complement().members()) {
                CharSet t = p;
                t.insert(n);
                (classify_set(t) == OrbitClass::C3Minus ? minus : plus) += 1;
            }
            rec.check(minus == 4 && plus == 4, p.to_string());
        }
        out.push_back(rec.done());
    }

    for (auto [id, tc, qc] : {std::tuple{"l0", OrbitClass::C3Minus, OrbitClass::C4Minus},
                              std::tuple{"l0+", OrbitClass::C3Plus, OrbitClass::C4Plus}}) {
        LemmaRecorder rec(id);
        for (CharSet t : orbit_members(tc)) {
            int count = 0, last = -1;
            for (int n : t.complement().members()) {
                CharSet q = t;
                q.insert(n);
                if (classify_set(q) == qc) {
                    ++count;
                    last = n;
                }
            }
            bool ok = count == 1;
            if (ok && qc == OrbitClass::C4Plus)
                ok = kEven[last] == t.sum();
            rec.check(ok, t.to_string());
        }
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("c4+");
        for (CharSet q : subsets_of_size(4))
            rec.check((classify_set(q) == OrbitClass::C4Plus) == (q.sum() == Char2()), q.to_string());
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("c1");
        for (CharSet p : pairs) {
            int count = 0;
            for (CharSet q : c4m)
                count += q.contains(p);
            rec.check(count == 2, p.to_string());
        }
        out.push_back(rec.done());
    }

    {
        // {m1,m2,h,k}, {m3,m4,h,k} in C4- => {m1..m4} in C4-
        LemmaRecorder rec("l1t");
        for (CharSet q1 : c4m)
            for (CharSet q2 : c4m)
                if (q1 != q2 && (q1 & q2).size() == 2)
                    rec.check(classify_set(q1 ^ q2) == OrbitClass::C4Minus, q1.to_string() + q2.to_string());
        out.push_back(rec.done());
    }

    {
        // {m1,m2,m3,n}, {m4,m5,m6,n} in C4- => {h1,h2,h3,n} in C4-
        LemmaRecorder rec("l2t");
        for (CharSet q1 : c4m)
            for (CharSet q2 : c4m)
                if ((q1 & q2).size() == 1) {
                    CharSet rest = (q1 | q2).complement() | (q1 & q2);
                    rec.check(classify_set(rest) == OrbitClass::C4Minus, q1.to_string() + q2.to_string());
                }
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("c5-c4-");
        for (CharSet s : subsets_of_size(5)) {
            if (classify_set(s) == OrbitClass::C5Minus)
                continue;
            bool none = true;
            for (CharSet q : subsets_of(s, 4))
                none = none && classify_set(q) != OrbitClass::C4Minus;
            rec.check(none, s.to_string());
        }
        out.push_back(rec.done());
    }

    const auto sextuples = subsets_of_size(6);
    {
        LemmaRecorder rec("c6-c5-");
        for (CharSet s : sextuples) {
            int count = 0;
            for (CharSet f : subsets_of(s, 5))
                count += classify_set(f) == OrbitClass::C5Minus;
            rec.check((classify_set(s) == OrbitClass::C6Minus) == (count == 6), s.to_string());
        }
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("c6-sum0");
        for (CharSet s : sextuples)
            rec.check((classify_set(s) == OrbitClass::C6Minus) == (s.sum() == Char2()), s.to_string());
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("l00c");
        for (CharSet s : sextuples) {
            bool has_plus = false, has_minus = false;
            for (CharSet q : subsets_of(s, 4)) {
                OrbitClass c = classify_set(q);
                has_plus = has_plus || c == OrbitClass::C4Plus;
                has_minus = has_minus || c == OrbitClass::C4Minus;
            }
            OrbitClass c = classify_set(s);
            rec.check((c == OrbitClass::C6Minus) == !has_plus, s.to_string());
            rec.check((c == OrbitClass::C6Plus) == !has_minus, s.to_string());
        }
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("pA");
        for (CharSet q1 : c4m)
            for (CharSet q2 : c4m) {
                int k = (q1 & q2).size();
                bool ok = k != 0;
                if (k == 1)
                    ok = classify_set(q1 ^ q2) == OrbitClass::C6Plus;
                else if (k == 2)
                    ok = classify_set(q1 ^ q2) == OrbitClass::C4Minus;
                else if (k > 2)
                    ok = q1 == q2;
                rec.check(ok, q1.to_string() + q2.to_string());
            }
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("pB");
        for (CharSet s1 : c6p)
            for (CharSet s2 : c6p) {
                int k = (s1 & s2).size();
                bool ok = k >= 3;
                if (k == 3)
                    ok = classify_set(s1 ^ s2) == OrbitClass::C6Plus;
                else if (k == 4)
                    ok = classify_set(s1 ^ s2) == OrbitClass::C4Minus;
                else if (k > 4)
                    ok = s1 == s2;
                rec.check(ok, s1.to_string() + s2.to_string());
            }
        out.push_back(rec.done());
    }

    {
        LemmaRecorder rec("pC");
        for (CharSet s : c6p)
            for (CharSet q : c4m) {
                if (s.complement() == q)
                    continue;
                int k = (s & q).size();
                bool ok = false;
                if (k == 3)
                    ok = classify_set(s ^ q) == OrbitClass::C4Minus;
                else if (k == 2)
                    ok = classify_set(s ^ q) == OrbitClass::C6Plus;
                rec.check(ok, s.to_string() + q.to_string());
            }
        out.push_back(rec.done());
    }

    return out;
}

} // namespace siegel2
