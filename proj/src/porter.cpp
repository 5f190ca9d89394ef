#include "lexmatch/porter.hpp"

#include <string_view>

namespace lexmatch::textproc {

namespace {

// Working state for one word. The live region of `w` is [0, k]; `j` marks the
// end of the stem after a successful suffix match.
struct PorterState {
    std::string& w;
    int k;
    int j = 0;

    explicit PorterState(std::string& word) : w(word), k(static_cast<int>(word.size()) - 1) {}

    bool is_consonant(int i) const {
        switch (w[static_cast<size_t>(i)]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !is_consonant(i - 1);
            default:
                return true;
        }
    }

    // Number of vowel-consonant sequences in w[0..j].
    int measure() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!is_consonant(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (is_consonant(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) return n;
                if (!is_consonant(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!is_consonant(i)) return true;
        return false;
    }

    bool double_consonant(int i) const {
        if (i < 1) return false;
        if (w[static_cast<size_t>(i)] != w[static_cast<size_t>(i) - 1]) return false;
        return is_consonant(i);
    }

    // w[i-2..i] is consonant-vowel-consonant and the final consonant is not
    // w, x or y. Used when deciding whether to restore a trailing e.
    bool cvc(int i) const {
        if (i < 2 || !is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2))
            return false;
        char ch = w[static_cast<size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (w.compare(static_cast<size_t>(k - len + 1), static_cast<size_t>(len), s) != 0)
            return false;
        j = k - len;
        return true;
    }

    // Replace w[j+1..k] with s.
    void set_to(std::string_view s) {
        w.replace(static_cast<size_t>(j) + 1, static_cast<size_t>(k - j), s);
        k = j + static_cast<int>(s.size());
    }

    void replace_if_measure(std::string_view s) {
        if (measure() > 0) set_to(s);
    }

    char at(int i) const { return w[static_cast<size_t>(i)]; }

    // Plurals and -ed / -ing.
    void step1ab() {
        if (at(k) == 's') {
            if (ends("sses"))
                k -= 2;
            else if (ends("ies"))
                set_to("i");
            else if (at(k - 1) != 's')
                --k;
        }
        if (ends("eed")) {
            if (measure() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at"))
                set_to("ate");
            else if (ends("bl"))
                set_to("ble");
            else if (ends("iz"))
                set_to("ize");
            else if (double_consonant(k)) {
                --k;
                char ch = at(k);
                if (ch == 'l' || ch == 's' || ch == 'z') ++k;
            } else if (measure() == 1 && cvc(k)) {
                set_to("e");
            }
        }
    }

    // Terminal y to i when there is another vowel in the stem.
    void step1c() {
        if (ends("y") && vowel_in_stem()) w[static_cast<size_t>(k)] = 'i';
    }

    // Double suffices mapped to single ones; stem before the suffix needs m > 0.
    void step2() {
        switch (at(k - 1)) {
            case 'a':
                if (ends("ational")) { replace_if_measure("ate"); break; }
                if (ends("tional")) { replace_if_measure("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_measure("ence"); break; }
                if (ends("anci")) { replace_if_measure("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_measure("ize"); break; }
                break;
            case 'l':
                if (ends("bli")) { replace_if_measure("ble"); break; }
                if (ends("alli")) { replace_if_measure("al"); break; }
                if (ends("entli")) { replace_if_measure("ent"); break; }
                if (ends("eli")) { replace_if_measure("e"); break; }
                if (ends("ousli")) { replace_if_measure("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_measure("ize"); break; }
                if (ends("ation")) { replace_if_measure("ate"); break; }
                if (ends("ator")) { replace_if_measure("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_measure("al"); break; }
                if (ends("iveness")) { replace_if_measure("ive"); break; }
                if (ends("fulness")) { replace_if_measure("ful"); break; }
                if (ends("ousness")) { replace_if_measure("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_measure("al"); break; }
                if (ends("iviti")) { replace_if_measure("ive"); break; }
                if (ends("biliti")) { replace_if_measure("ble"); break; }
                break;
            case 'g':
                if (ends("logi")) { replace_if_measure("log"); break; }
                break;
        }
    }

    // -ic-, -ful, -ness and friends.
    void step3() {
        switch (at(k)) {
            case 'e':
                if (ends("icate")) { replace_if_measure("ic"); break; }
                if (ends("ative")) { replace_if_measure(""); break; }
                if (ends("alize")) { replace_if_measure("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_measure("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_measure("ic"); break; }
                if (ends("ful")) { replace_if_measure(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_measure(""); break; }
                break;
        }
    }

    // -ant, -ence etc. removed in context <c>vcvc<v>.
    void step4() {
        switch (at(k - 1)) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && j >= 0 && (at(j) == 's' || at(j) == 't')) break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (measure() > 1) k = j;
    }

    // Final -e removal and -ll reduction.
    void step5() {
        j = k;
        if (at(k) == 'e') {
            int a = measure();
            if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
        }
        if (at(k) == 'l' && double_consonant(k) && measure() > 1) --k;
    }
};

}  // namespace

std::string porter_stem(std::string word) {
    if (word.size() <= 2) return word;
    for (char c : word)
        if (c < 'a' || c > 'z') return word;

    PorterState s(word);
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    word.resize(static_cast<size_t>(s.k) + 1);
    return word;
}

}  // namespace lexmatch::textproc
