// Copyright 2026 The polex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polex/citation.h"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "polex/errors.h"
#include "polex/text.h"

namespace polex {
namespace {

enum class Tok { kWord, kNumber, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;   // as written, without the trailing abbreviation dot
  std::string lower;  // lowercase form of `text`
  bool dotted = false;
  char32_t punct = 0;
  long value = 0;
  int digits = 0;
  std::size_t begin = 0;  // codepoint offsets in the source
  std::size_t end = 0;

  std::string display() const { return text + (dotted ? "." : ""); }
};

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’' || c == U'‘'; }

bool is_letter(char32_t c) {
  return text::is_word_char(c) && !text::is_decimal_digit(c) && c != U'_';
}

std::vector<Token> tokenize(const std::u32string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char32_t c = s[i];
    if (text::is_space(c)) {
      ++i;
      continue;
    }
    Token t;
    t.begin = i;
    if (c >= U'0' && c <= U'9') {
      t.kind = Tok::kNumber;
      while (i < s.size() && s[i] >= U'0' && s[i] <= U'9') {
        if (t.digits < 12) t.value = t.value * 10 + (s[i] - U'0');
        ++t.digits;
        ++i;
      }
      t.text = text::encode_utf8(std::u32string_view(s).substr(t.begin, i - t.begin));
    } else if (is_letter(c)) {
      t.kind = Tok::kWord;
      while (i < s.size() && is_letter(s[i])) ++i;
      const auto word = std::u32string_view(s).substr(t.begin, i - t.begin);
      t.text = text::encode_utf8(word);
      t.lower = text::encode_utf8(text::to_lower(word));
      if (i < s.size() && s[i] == U'.') {
        t.dotted = true;
        ++i;
      }
    } else {
      t.kind = Tok::kPunct;
      t.punct = c;
      t.text = text::encode_utf8(std::u32string_view(&s[i], 1));
      ++i;
    }
    t.end = i;
    out.push_back(std::move(t));
  }
  return out;
}

constexpr std::array<std::string_view, 12> kItalianMonths = {
    "gennaio", "febbraio", "marzo", "aprile", "maggio", "giugno",
    "luglio", "agosto", "settembre", "ottobre", "novembre", "dicembre"};
constexpr std::array<std::string_view, 12> kEnglishMonths = {
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december"};

int month_number(std::string_view lower) {
  for (std::size_t m = 0; m < 12; ++m) {
    if (lower == kItalianMonths[m] || lower == kEnglishMonths[m]) return static_cast<int>(m) + 1;
  }
  return 0;
}

std::string to_roman_upper(const Token& t) {
  std::string s = t.text;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

bool is_roman(std::string_view lower) {
  static constexpr std::array<std::string_view, 12> kRoman = {
      "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii"};
  return std::find(kRoman.begin(), kRoman.end(), lower) != kRoman.end();
}

enum class Clause { kNone, kMarker, kCourt, kDivision, kSection, kKind, kDate, kReference, kPlace };

class CitationParser {
 public:
  CitationParser(std::string_view raw, std::vector<Token> tokens)
      : raw_(raw), toks_(std::move(tokens)) {}

  // Parses the whole token range [first, last). Throws on leftovers.
  CitationRef parse_all(std::size_t first, std::size_t last) {
    pos_ = first;
    end_ = last;
    parse_marker();
    while (pos_ < end_) {
      if (accept_separator()) continue;
      if (!parse_clause()) fail_here("unexpected token");
    }
    if (!has_reference()) {
      throw UnparseableCitation("", toks_.empty() ? 0 : toks_[last - 1].end,
                                "citation has no number, year or date");
    }
    return ref_;
  }

  // Parses as many clauses as possible from `first`. Returns the index one
  // past the last consumed meaningful token, or nullopt when the prefix is
  // not a citation.
  std::optional<std::size_t> parse_prefix(std::size_t first, std::size_t last) {
    pos_ = first;
    end_ = last;
    parse_marker();
    std::size_t good = pos_;
    try {
      while (pos_ < end_) {
        if (is_terminator(toks_[pos_])) break;
        if (accept_separator()) continue;
        const std::size_t before = pos_;
        if (parse_clause()) {
          if (last_ != Clause::kNone) good = pos_;
          continue;
        }
        pos_ = before;
        break;
      }
    } catch (const UnparseableCitation&) {
      return std::nullopt;
    }
    if (!has_reference() || !looks_like_citation()) return std::nullopt;
    return good;
  }

  CitationRef& ref() { return ref_; }

 private:
  static bool is_terminator(const Token& t) {
    return t.kind == Tok::kPunct &&
           (t.punct == U';' || t.punct == U'(' || t.punct == U')' || t.punct == U':' ||
            t.punct == U'.');
  }

  bool has_reference() const {
    return ref_.number.has_value() || ref_.year.has_value() || ref_.date.has_value();
  }

  bool looks_like_citation() const {
    return court_set_ || saw_kind_ || saw_number_marker_;
  }

  const Token* at(std::size_t i) const { return i < end_ ? &toks_[i] : nullptr; }

  bool word_is(std::size_t i, std::initializer_list<std::string_view> options) const {
    const Token* t = at(i);
    if (t == nullptr || t->kind != Tok::kWord) return false;
    return std::find(options.begin(), options.end(), t->lower) != options.end();
  }

  bool punct_is(std::size_t i, char32_t c) const {
    const Token* t = at(i);
    return t != nullptr && t->kind == Tok::kPunct && t->punct == c;
  }

  bool number_at(std::size_t i) const {
    const Token* t = at(i);
    return t != nullptr && t->kind == Tok::kNumber;
  }

  [[noreturn]] void fail_here(const std::string& what) const {
    const Token& t = toks_[pos_];
    throw UnparseableCitation(t.display(), t.begin,
                              what + " '" + t.display() + "' at offset " +
                                  std::to_string(t.begin) + " in \"" + std::string(raw_) + "\"");
  }

  bool accept_separator() {
    if (punct_is(pos_, U',') || punct_is(pos_, U'-') || punct_is(pos_, U'–')) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Skips "di", "d'" and similar between words of a court name.
  std::size_t skip_linking(std::size_t i) const {
    if (word_is(i, {"di", "del", "dei", "della", "of"})) return i + 1;
    if (word_is(i, {"d", "dell"}) && at(i + 1) && at(i + 1)->kind == Tok::kPunct &&
        is_apostrophe(at(i + 1)->punct)) {
      return i + 2;
    }
    return i;
  }

  bool parse_clause() {
    if (parse_court()) return set_last(Clause::kCourt);
    if (parse_division()) return set_last(Clause::kDivision);
    if (parse_section()) return set_last(Clause::kSection);
    if (parse_kind()) return set_last(Clause::kKind);
    if (parse_date()) return set_last(Clause::kDate);
    if (parse_reference()) return set_last(Clause::kReference);
    if (parse_place()) return set_last(Clause::kPlace);
    if (parse_connector()) return true;  // keeps last_ unchanged
    return false;
  }

  bool set_last(Clause c) {
    last_ = c;
    return true;
  }

  void parse_marker() {
    if (word_is(pos_, {"cfr", "cf", "vedi", "vd", "conf", "see"}) ||
        (word_is(pos_, {"v"}) && toks_[pos_].dotted)) {
      ref_.marker = toks_[pos_].display();
      ++pos_;
      if (punct_is(pos_, U':')) ++pos_;
    }
  }

  void set_court(Court c, std::string other = {}) {
    ref_.court = c;
    ref_.other_court = std::move(other);
    court_set_ = true;
  }

  bool parse_court() {
    if (court_set_) return false;
    std::size_t i = pos_;
    bool supreme = false;
    if (word_is(i, {"suprema", "supreme"}) && word_is(i + 1, {"corte", "court"})) {
      supreme = true;
      ++i;
    }

    if (word_is(i, {"corte"}) || (word_is(i, {"c"}) && toks_[i].dotted)) {
      const bool full = word_is(i, {"corte"});
      const std::size_t j = skip_linking(i + 1);
      if (word_is(j, {"cassazione", "cass"})) {
        set_court(Court::kCassazione);
        pos_ = j + 1;
      } else if (word_is(j, {"cost", "costituzionale"})) {
        set_court(Court::kCorteCostituzionale);
        pos_ = j + 1;
      } else if (word_is(j, {"appello", "app"})) {
        set_court(Court::kCorteAppello);
        pos_ = j + 1;
      } else if (word_is(j, {"edu"})) {
        set_court(Court::kOther, "Corte EDU");
        pos_ = j + 1;
      } else if (word_is(j, {"giustizia"})) {
        set_court(Court::kOther, "Corte di giustizia");
        pos_ = j + 1;
      } else if (word_is(j, {"conti"})) {
        set_court(Court::kOther, "Corte dei conti");
        pos_ = j + 1;
      } else if (full) {
        if (supreme) {
          set_court(Court::kCassazione);
        } else {
          set_court(Court::kOther, "Corte");
        }
        pos_ = i + 1;
      } else {
        return false;
      }
      return true;
    }
    if (supreme && word_is(i, {"court"})) {
      set_court(Court::kCassazione);
      pos_ = i + 1;
      return true;
    }
    if (word_is(i, {"cass", "cassazione"})) {
      set_court(Court::kCassazione);
      pos_ = i + 1;
      return true;
    }
    if (word_is(i, {"cost"}) && toks_[i].dotted) {
      set_court(Court::kCorteCostituzionale);
      pos_ = word_is(i + 1, {"court"}) ? i + 2 : i + 1;
      return true;
    }
    if (word_is(i, {"constitutional"}) && word_is(i + 1, {"court"})) {
      set_court(Court::kCorteCostituzionale);
      pos_ = i + 2;
      return true;
    }
    if (word_is(i, {"court"})) {
      const std::size_t j = skip_linking(i + 1);
      if (word_is(j, {"cassation"})) {
        set_court(Court::kCassazione);
      } else if (word_is(j, {"appeal", "appeals"})) {
        set_court(Court::kCorteAppello);
      } else {
        return false;
      }
      pos_ = j + 1;
      return true;
    }
    if (word_is(i, {"trib", "tribunale", "tribunal"})) {
      set_court(Court::kTribunale);
      pos_ = i + 1;
      parse_juvenile();
      return true;
    }
    if (word_is(i, {"app"}) && toks_[i].dotted) {
      set_court(Court::kCorteAppello);
      pos_ = i + 1;
      return true;
    }
    if (word_is(i, {"cons"}) && toks_[i].dotted && word_is(i + 1, {"stato", "st"})) {
      set_court(Court::kOther, "Consiglio di Stato");
      pos_ = i + 2;
      return true;
    }
    if (word_is(i, {"consiglio"}) && word_is(i + 1, {"di"}) && word_is(i + 2, {"stato"})) {
      set_court(Court::kOther, "Consiglio di Stato");
      pos_ = i + 3;
      return true;
    }
    if (word_is(i, {"tar"})) {
      set_court(Court::kOther, "TAR");
      pos_ = i + 1;
      return true;
    }
    return false;
  }

  // "Trib. min.", "Tribunale per i minorenni".
  void parse_juvenile() {
    if (word_is(pos_, {"min", "minorenni", "minori"})) {
      ref_.section = "minorenni";
      ++pos_;
    } else if (word_is(pos_, {"per"}) && word_is(pos_ + 1, {"i"}) &&
               word_is(pos_ + 2, {"minorenni", "minori"})) {
      ref_.section = "minorenni";
      pos_ += 3;
    }
  }

  bool parse_division() {
    if (ref_.division) return false;
    if (word_is(pos_, {"civ", "civile", "civili", "civil"})) {
      ref_.division = "civ.";
    } else if (word_is(pos_, {"pen", "penale", "penali", "criminal", "crim"})) {
      ref_.division = "pen.";
    } else if (word_is(pos_, {"lav", "lavoro"})) {
      ref_.division = "lav.";
    } else {
      return false;
    }
    ++pos_;
    return true;
  }

  bool set_united(std::size_t consumed) {
    if (ref_.section && ref_.section != "U.S.") return false;
    ref_.section = "U.S.";
    pos_ += consumed;
    return true;
  }

  bool parse_section() {
    if (ref_.section) return false;
    const std::size_t i = pos_;
    if ((word_is(i, {"s"}) && word_is(i + 1, {"u"})) || (word_is(i, {"u"}) && word_is(i + 1, {"s"})) ||
        (word_is(i, {"ss"}) && word_is(i + 1, {"uu"})) || (word_is(i, {"uu"}) && word_is(i + 1, {"ss"})) ||
        (word_is(i, {"sezioni", "sez"}) && word_is(i + 1, {"unite", "un"})) ||
        (word_is(i, {"united"}) && word_is(i + 1, {"sections", "section"}))) {
      return set_united(2);
    }
    if (word_is(i, {"su", "ssuu", "uuss"})) return set_united(1);
    if (word_is(i, {"sez", "sezione", "sect", "section", "sec"})) {
      const Token* v = at(i + 1);
      if (v == nullptr) return false;
      if (v->kind == Tok::kWord && is_roman(v->lower)) {
        ref_.section = "sez. " + to_roman_upper(*v);
      } else if (v->kind == Tok::kNumber) {
        ref_.section = "sez. " + v->text;
      } else if (v->kind == Tok::kWord &&
                 (v->lower == "lav" || v->lower == "trib" || v->lower == "fer" ||
                  v->lower == "lavoro" || v->lower == "feriale" || v->lower == "tributaria")) {
        ref_.section = "sez. " + v->display();
      } else {
        return false;
      }
      pos_ = i + 2;
      return true;
    }
    return false;
  }

  bool parse_kind() {
    if (word_is(pos_, {"n", "no", "nr", "num", "numero", "number", "nn"})) {
      saw_number_marker_ = true;
      ++pos_;
      if (punct_is(pos_, U'°')) ++pos_;
      return true;
    }
    if (word_is(pos_, {"sent", "sentenza", "sentence", "ord", "ordinanza", "ordinance",
                       "decreto", "decree", "decisione", "decision", "pronuncia",
                       "judgment", "judgement", "dec"})) {
      saw_kind_ = true;
      ++pos_;
      return true;
    }
    return false;
  }

  void set_date(int y, int m, int d, std::size_t error_token) {
    using namespace std::chrono;
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || y < 1900 || y > 2099) {
      pos_ = error_token;
      fail_here("invalid date near");
    }
    if (ref_.year && *ref_.year != y) {
      pos_ = error_token;
      fail_here("year conflicts with date near");
    }
    ref_.date = ymd;
    ref_.year = y;
  }

  bool parse_date() {
    if (ref_.date) return false;
    const std::size_t i = pos_;
    // dd/mm/yyyy, dd.mm.yyyy, dd-mm-yyyy
    if (number_at(i) && number_at(i + 2) && number_at(i + 4)) {
      const Token& sep1 = toks_[i + 1];
      const Token& sep2 = toks_[i + 3];
      if (sep1.kind == Tok::kPunct && sep2.kind == Tok::kPunct && sep1.punct == sep2.punct &&
          (sep1.punct == U'/' || sep1.punct == U'.' || sep1.punct == U'-') &&
          toks_[i].digits <= 2 && toks_[i + 2].digits <= 2 &&
          (toks_[i + 4].digits == 4 || toks_[i + 4].digits == 2)) {
        const int y = normalize_year(static_cast<int>(toks_[i + 4].value), toks_[i + 4].digits);
        set_date(y, static_cast<int>(toks_[i + 2].value), static_cast<int>(toks_[i].value), i);
        pos_ = i + 5;
        return true;
      }
    }
    // 11 novembre 2008
    if (number_at(i) && toks_[i].digits <= 2 && at(i + 1) && at(i + 1)->kind == Tok::kWord &&
        month_number(at(i + 1)->lower) != 0 && number_at(i + 2) && toks_[i + 2].digits == 4) {
      set_date(static_cast<int>(toks_[i + 2].value), month_number(toks_[i + 1].lower),
               static_cast<int>(toks_[i].value), i);
      pos_ = i + 3;
      return true;
    }
    // November 11, 2008
    if (at(i) && at(i)->kind == Tok::kWord && month_number(at(i)->lower) != 0 && number_at(i + 1) &&
        toks_[i + 1].digits <= 2) {
      std::size_t j = i + 2;
      if (punct_is(j, U',')) ++j;
      if (number_at(j) && toks_[j].digits == 4) {
        set_date(static_cast<int>(toks_[j].value), month_number(toks_[i].lower),
                 static_cast<int>(toks_[i + 1].value), i);
        pos_ = j + 1;
        return true;
      }
    }
    return false;
  }

  bool parse_reference() {
    const std::size_t i = pos_;
    if (!number_at(i)) return false;
    if (ref_.number) return false;
    if (toks_[i].value <= 0) fail_here("non-positive number");
    if (punct_is(i + 1, U'/') && number_at(i + 2)) {
      const Token& y = toks_[i + 2];
      if (y.digits != 2 && y.digits != 4) {
        pos_ = i + 2;
        fail_here("malformed year");
      }
      const int year = normalize_year(static_cast<int>(y.value), y.digits);
      if (year < 1900 || year > 2099) {
        pos_ = i + 2;
        fail_here("year out of range");
      }
      if (ref_.year && *ref_.year != year) {
        pos_ = i + 2;
        fail_here("year conflicts with date near");
      }
      ref_.number = toks_[i].value;
      ref_.year = year;
      pos_ = i + 3;
      return true;
    }
    ref_.number = toks_[i].value;
    pos_ = i + 1;
    return true;
  }

  bool parse_place() {
    if (last_ != Clause::kCourt || ref_.place) return false;
    if (ref_.court != Court::kTribunale && ref_.court != Court::kCorteAppello &&
        ref_.court != Court::kOther) {
      return false;
    }
    const Token* t = at(pos_);
    if (t == nullptr || t->kind != Tok::kWord || t->dotted || t->text == t->lower) return false;
    std::string place = t->text;
    ++pos_;
    const Token* next = at(pos_);
    if (next != nullptr && next->kind == Tok::kWord && !next->dotted && next->text != next->lower &&
        month_number(next->lower) == 0) {
      place += " " + next->text;
      ++pos_;
    }
    ref_.place = place;
    return true;
  }

  bool parse_connector() {
    const std::size_t i = pos_;
    if (word_is(i, {"d", "dell", "nell", "all", "dall", "sull"}) && at(i + 1) &&
        at(i + 1)->kind == Tok::kPunct && is_apostrophe(at(i + 1)->punct)) {
      pos_ = i + 2;
      return true;
    }
    if (word_is(i, {"di", "del", "della", "dello", "dei", "degli", "delle", "nella", "nel",
                    "in", "of", "the", "data", "on", "dated", "dal", "emessa", "resa", "with",
                    "con", "la", "il"})) {
      pos_ = i + 1;
      return true;
    }
    return false;
  }

  std::string_view raw_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  CitationRef ref_;
  Clause last_ = Clause::kNone;
  bool court_set_ = false;
  bool saw_kind_ = false;
  bool saw_number_marker_ = false;
};

bool is_court_anchor(const Token& t) {
  if (t.kind != Tok::kWord) return false;
  static constexpr std::array<std::string_view, 12> kAnchors = {
      "corte", "cass", "cassazione", "trib", "tribunale", "cost", "court",
      "constitutional", "suprema", "consiglio", "tar", "app"};
  return std::find(kAnchors.begin(), kAnchors.end(), t.lower) != kAnchors.end() &&
         (t.lower != "app" || t.dotted) && (t.lower != "cost" || t.dotted);
}

bool is_marker_word(const Token& t) {
  return t.kind == Tok::kWord &&
         (t.lower == "cfr" || t.lower == "cf" || t.lower == "vedi" || (t.lower == "v" && t.dotted));
}

// Text of the source between token `first` and the end of token `last - 1`.
std::string source_slice(const std::u32string& s, const std::vector<Token>& toks,
                         std::size_t first, std::size_t last) {
  const std::size_t b = toks[first].begin;
  const std::size_t e = toks[last - 1].end;
  return text::encode_utf8(std::u32string_view(s).substr(b, e - b));
}

}  // namespace

std::string to_string(Court court) {
  switch (court) {
    case Court::kCassazione: return "Cassazione";
    case Court::kCorteCostituzionale: return "CorteCostituzionale";
    case Court::kCorteAppello: return "CorteAppello";
    case Court::kTribunale: return "Tribunale";
    case Court::kOther: return "Other";
  }
  return "Other";
}

std::optional<Court> parse_court(std::string_view name) {
  for (Court c : {Court::kCassazione, Court::kCorteCostituzionale, Court::kCorteAppello,
                  Court::kTribunale, Court::kOther}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

int normalize_year(int year, int digits) {
  if (digits != 2) return year;
  return year <= kTwoDigitYearPivot ? 2000 + year : 1900 + year;
}

CitationRef parse_citation(std::string_view raw) {
  if (text::is_blank(raw)) throw UnparseableCitation("", 0, "empty citation");
  const std::u32string s = text::decode_utf8(raw);
  std::vector<Token> toks = tokenize(s);

  std::size_t first = 0;
  std::size_t last = toks.size();
  const auto is_punct = [&](std::size_t i, char32_t c) {
    return toks[i].kind == Tok::kPunct && toks[i].punct == c;
  };
  while (last > first && (is_punct(last - 1, U'.') || is_punct(last - 1, U';') ||
                          is_punct(last - 1, U','))) {
    --last;
  }
  if (last - first >= 2 && is_punct(first, U'(') && is_punct(last - 1, U')')) {
    ++first;
    --last;
  }
  if (first == last) throw UnparseableCitation("", 0, "empty citation");

  CitationParser parser(raw, std::move(toks));
  CitationRef ref = parser.parse_all(first, last);
  ref.raw = std::string(raw);
  return ref;
}

std::vector<CitationRef> find_citations(std::string_view paragraph) {
  const std::u32string s = text::decode_utf8(paragraph);
  const std::vector<Token> toks = tokenize(s);
  std::vector<std::pair<std::size_t, CitationRef>> found;

  auto try_full = [&](std::size_t b, std::size_t e) {
    if (b >= e) return;
    const std::string piece = text::trim(text::encode_utf8(
        std::u32string_view(s).substr(toks[b].begin, toks[e - 1].end - toks[b].begin)));
    try {
      found.emplace_back(toks[b].begin, parse_citation(piece));
    } catch (const UnparseableCitation&) {
    }
  };

  std::vector<bool> inside(toks.size(), false);
  // Parenthesized groups, innermost content split on ';'.
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind != Tok::kPunct) continue;
    if (toks[i].punct == U'(') {
      stack.push_back(i);
    } else if (toks[i].punct == U')' && !stack.empty()) {
      const std::size_t open = stack.back();
      stack.pop_back();
      std::size_t piece = open + 1;
      for (std::size_t k = open + 1; k <= i; ++k) {
        if (k == i || (toks[k].kind == Tok::kPunct && toks[k].punct == U';')) {
          try_full(piece, k);
          piece = k + 1;
        }
      }
      for (std::size_t k = open; k <= i; ++k) inside[k] = true;
    }
  }

  // Bare citations anchored at a court name.
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (inside[i] || !is_court_anchor(toks[i])) continue;
    std::size_t first = i;
    if (i > 0 && !inside[i - 1] && is_marker_word(toks[i - 1])) first = i - 1;
    std::size_t limit = i;
    while (limit < toks.size() && !inside[limit]) ++limit;
    CitationParser parser(paragraph, toks);
    const auto stop = parser.parse_prefix(first, limit);
    if (!stop || *stop <= i) continue;
    CitationRef ref = parser.ref();
    ref.raw = source_slice(s, toks, first, *stop);
    found.emplace_back(toks[first].begin, std::move(ref));
    i = *stop - 1;
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CitationRef> out;
  out.reserve(found.size());
  for (auto& [_, ref] : found) out.push_back(std::move(ref));
  return out;
}

}  // namespace polex
