#include "generators.hpp"

#include <algorithm>
#include <map>

#include "escandir/lexicon.hpp"

namespace gen {

namespace {

const std::map<std::string, std::vector<int>>& mente_stresses() {
  static const std::map<std::string, std::vector<int>> m{
      {"solamente", {1, 3}}, {"dulcemente", {1, 3}}, {"tristemente", {1, 3}}};
  return m;
}

bool is_atonic(const std::string& w) {
  static const auto lexicon = escandir::LexiconConfig::standard();
  return lexicon.is_atonic(w);
}

bool plain(const std::string& w) {
  const auto o = oracle::word(w);
  for (const auto& g : o.groups) if (g.chars.size() > 1) return false;
  for (const auto& s : oracle::sites({verse_word(w)})) if (s.kind == oracle::Site::syneresis) return false;
  return true;
}

}  // namespace

oracle::VerseWord verse_word(const std::string& normalized) {
  oracle::VerseWord vw{normalized, is_atonic(normalized), {}};
  if (auto it = mente_stresses().find(normalized); it != mente_stresses().end()) vw.stress_override = it->second;
  return vw;
}

std::vector<oracle::VerseWord> verse_words(const std::vector<std::string>& words) {
  std::vector<oracle::VerseWord> out;
  for (const auto& w : words) out.push_back(verse_word(w));
  return out;
}

const std::vector<std::string>& bank() {
  static const std::vector<std::string> words{
      // tonic, consonant edges
      "casa", "rosa", "luna", "noche", "tarde", "monte", "campo", "verso", "sombra", "mano", "lento", "color",
      "verdad", "papel", "jardín", "feliz", "calor", "reloj", "sábado", "pájaro", "lágrima", "música", "cántaro",
      "camino", "palabra", "montaña", "paloma", "ventana", "cabello", "mañana", "mariposa", "golondrina",
      "caminante", "sol", "mar", "luz", "pan", "flor", "sed", "red", "paz", "voz", "mes", "dulce", "triste",
      "blanco", "verde", "negro", "claro", "lejos", "nunca", "todo", "nada", "canto", "llanto", "pena", "gozo",
      "lumbre", "fuente", "tiempo", "jamás", "después", "pálido", "cándido", "tú", "mí", "fe", "se", "vez",
      // vowel edges
      "amor", "azul", "alto", "oro", "agua", "aire", "ave", "ala", "eco", "isla", "umbral", "oscuro", "alegre",
      "ermita", "íntimo", "último", "ánimo", "héroe", "océano", "ojos", "hondo", "olvido", "hermosa", "ahora",
      "hora", "hielo", "huerto", "hueco", "un", "una", "este", "esta",
      // diphthongs and hiatus
      "cielo", "tierra", "fuego", "viento", "nieve", "puerta", "sueño", "muerte", "alma", "vida", "canción",
      "corazón", "poeta", "poesía", "día", "río", "país", "ruido", "suave", "ciudad", "fluir", "cruel",
      "quiero", "guerra", "siempre", "tiene", "lleva", "oído", "leer", "maestro", "gloria", "historia",
      "armonía", "feo", "leal", "real", "viuda", "cuidado", "aurora", "causa", "reina", "deuda", "buey", "hoy",
      "muy", "rey", "ley",
      // -mente
      "solamente", "dulcemente", "tristemente",
      // atonic
      "el", "la", "los", "las", "de", "con", "por", "sin", "tras", "su", "sus", "mi", "mis", "tu", "tus", "te",
      "me", "nos", "y", "en", "a", "que", "para", "sobre", "desde", "hasta", "contra", "entre", "o"};
  return words;
}

const std::vector<std::string>& plain_bank() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    for (const auto& w : bank()) if (plain(w)) out.push_back(w);
    return out;
  }();
  return words;
}

std::vector<std::string> random_verse(Rng& rng, const std::vector<std::string>& words, int max_words) {
  std::uniform_int_distribution<int> length(2, std::max(2, max_words));
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::vector<std::string> out(static_cast<std::size_t>(length(rng)));
  for (auto& w : out) w = words[pick(rng)];
  while (is_atonic(out.back())) out.back() = words[pick(rng)];
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string punctuate(Rng& rng, const std::vector<std::string>& words) {
  static const std::vector<std::string> before{"", "", "", "¡", "¿", "«", "(", "—", "\""};
  static const std::vector<std::string> after{"", "", "", ",", ";", ":", ".", "!", "?", "»", ")", "…", "—", "\"",
                                              ",—", "!,"};
  std::uniform_int_distribution<std::size_t> b(0, before.size() - 1);
  std::uniform_int_distribution<std::size_t> a(0, after.size() - 1);
  std::uniform_int_distribution<int> spacing(0, 3);
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += spacing(rng) == 0 ? "  " : " ";
    out += before[b(rng)] + w + after[a(rng)];
  }
  return out;
}

namespace {

struct Search {
  Rng& rng;
  const escandir::MetricalPattern& target;
  const std::vector<std::string>& words;
  bool allow_contacts;
  std::vector<std::string> chosen;
  int budget = 20000;

  bool in_target(int p) const {
    return std::binary_search(target.positions.begin(), target.positions.end(), p);
  }

  bool run(int pos, bool prev_vowel) {
    if (--budget < 0 || chosen.size() > 12) return false;
    const int final_stress = target.measure - 1;
    std::vector<std::size_t> order(words.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) {
      const auto& text = words[i];
      const auto vw = verse_word(text);
      const auto o = oracle::word(text);
      const bool contact = prev_vowel && o.starts_vowel && !chosen.empty();
      if (contact && !allow_contacts) continue;
      const int start = contact ? pos : pos + 1;
      const int end = start + o.count() - 1;
      std::vector<int> stresses;
      if (!vw.atonic) {
        if (vw.stress_override.empty()) {
          stresses.push_back(start + o.stress - 1);
        } else {
          for (int k : vw.stress_override) stresses.push_back(start + k - 1);
        }
      }
      const bool is_final = !stresses.empty() && stresses.back() == final_stress;
      if (!is_final && end >= final_stress) continue;
      if (!stresses.empty() && stresses.back() > final_stress) continue;
      bool ok = true;
      for (int s : stresses) ok = ok && in_target(s);
      // Every target position this word newly covers must be one of its stresses.
      for (int p = contact ? start + 1 : start; p <= std::min(end, final_stress); ++p) {
        if (in_target(p) && std::find(stresses.begin(), stresses.end(), p) == stresses.end()) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(text);
      if (is_final || run(end, o.ends_vowel)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::string>> build_line(Rng& rng, const escandir::MetricalPattern& target,
                                                   const std::vector<std::string>& words, bool allow_contacts) {
  Search search{rng, target, words, allow_contacts, {}};
  if (!search.run(0, false)) return std::nullopt;
  return search.chosen;
}

const std::vector<GoldenVerse>& golden_verses() {
  static const std::vector<GoldenVerse> verses{
      {"Amigos, el amor me perjudica", 11, {2, 6, 10}},
      {"Creía que te había dicho adiós", 11, {2, 6, 8, 10}},
      {"Siempre la claridad viene del cielo", 11, {1, 6, 7, 10}},
      {"Oh, qué frescor, qué música / de chopos de estación", 14, {1, 2, 4, 5, 6, 9, 13}},
      {"Escucho solamente entre las voces una", 14, {2, 4, 6, 11, 13}},
      {"Todas las tardes se muere un niño", 11, {1, 4, 8, 9, 10}},
      {"una lucha común, y un descanso común", 14, {1, 3, 6, 8, 10, 13}},
      {"dentro de su fluir los manantiales", 11, {1, 6, 10}},
      {"si a Silvia la cruel pastora viere", 11, {3, 6, 8, 10}},
  };
  return verses;
}

namespace {

bool has_contact(const std::vector<std::string>& words) {
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (oracle::word(words[i]).ends_vowel && oracle::word(words[i + 1]).starts_vowel) return true;
  }
  return false;
}

bool no_sites(const std::vector<std::string>& words) {
  return oracle::sites(verse_words(words)).empty();
}

}  // namespace

std::vector<SynthVerse> polymetric_corpus(Rng& rng, int min_verses) {
  using escandir::MetricalPattern;
  const std::vector<std::vector<int>> seven{{2, 4, 6}, {3, 6}, {1, 3, 6}, {1, 4, 6}};
  const std::vector<std::vector<int>> eleven{{2, 6, 10}, {2, 4, 6, 10}, {2, 6, 8, 10}, {3, 6, 10},
                                             {1, 3, 6, 10}, {4, 8, 10}, {1, 4, 8, 10}, {4, 6, 10},
                                             {4, 7, 10}, {1, 6, 10}, {6, 10}, {2, 4, 8, 10}};
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<SynthVerse> out;
  std::size_t golden = 0;
  int block = 0;

  auto line = [&](const std::vector<int>& positions, int measure, bool contacts) {
    const MetricalPattern target{positions, measure};
    for (int attempt = 0; attempt < 50; ++attempt) {
      auto words = build_line(rng, target, contacts ? bank() : plain_bank(), contacts);
      if (words) return *words;
    }
    return std::vector<std::string>{};
  };

  while (static_cast<int>(out.size()) < min_verses || golden < golden_verses().size()) {
    const int kind = block % 3;
    ++block;
    for (int i = 0; i < 4; ++i) {
      const bool contacts = coin(rng) == 0;
      SynthVerse v;
      if (kind == 0 || kind == 1) {
        const auto& menu = kind == 0 ? seven : eleven;
        const int measure = kind == 0 ? 7 : 11;
        const auto& positions = menu[std::uniform_int_distribution<std::size_t>(0, menu.size() - 1)(rng)];
        const auto words = line(positions, measure, contacts);
        if (words.empty()) continue;
        const auto reading = oracle::scan(verse_words(words));
        v.text = join(words);
        v.gold = MetricalPattern{reading.positions, reading.measure};
        v.unambiguous = !has_contact(words) && no_sites(words);
      } else {
        const auto& p1 = seven[std::uniform_int_distribution<std::size_t>(0, seven.size() - 1)(rng)];
        const auto& p2 = seven[std::uniform_int_distribution<std::size_t>(0, seven.size() - 1)(rng)];
        const auto w1 = line(p1, 7, contacts);
        const auto w2 = line(p2, 7, contacts);
        if (w1.empty() || w2.empty()) continue;
        const auto r1 = oracle::scan(verse_words(w1));
        const auto r2 = oracle::scan(verse_words(w2));
        std::vector<int> positions = r1.positions;
        for (int p : r2.positions) positions.push_back(p + r1.measure);
        auto all = w1;
        all.insert(all.end(), w2.begin(), w2.end());
        v.text = join(all);
        v.gold = MetricalPattern{positions, r1.measure + r2.measure};
        v.unambiguous = !has_contact(all) && no_sites(all);
      }
      out.push_back(std::move(v));
    }
    if (golden < golden_verses().size()) {
      const auto& g = golden_verses()[golden++];
      out.push_back({g.text, MetricalPattern{g.positions, g.measure}, false, true});
    }
  }
  return out;
}

}  // namespace gen
