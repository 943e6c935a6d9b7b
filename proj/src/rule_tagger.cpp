// Copyright 2026 The nludiag Authors
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

#include <cctype>
#include <unordered_map>

#include "nludiag/error.hpp"
#include "nludiag/tagger.hpp"

namespace nludiag {

namespace {

struct WordRow {
  const char* word;
  Upos upos;
};

// Hand-curated word list. Entries exist where the suffix rules below would
// misfire ("uploading" is a gerund noun, "compelling" an adjective) and for
// the closed-class function words. Everything else falls through to the
// suffix rules and the NOUN default, mirroring the reference tagger's bias
// for unknown words.
constexpr WordRow kLexicon[] = {
    // determiners
    {"the", Upos::kDet}, {"a", Upos::kDet}, {"an", Upos::kDet}, {"this", Upos::kDet},
    {"these", Upos::kDet}, {"those", Upos::kDet}, {"which", Upos::kDet}, {"each", Upos::kDet},
    {"every", Upos::kDet}, {"all", Upos::kDet}, {"no", Upos::kDet}, {"any", Upos::kDet},
    {"both", Upos::kDet}, {"another", Upos::kDet}, {"either", Upos::kDet},
    {"neither", Upos::kDet}, {"there", Upos::kDet}, {"there's", Upos::kDet},
    // pronouns
    {"i", Upos::kPron}, {"you", Upos::kPron}, {"he", Upos::kPron}, {"she", Upos::kPron},
    {"it", Upos::kPron}, {"we", Upos::kPron}, {"they", Upos::kPron}, {"me", Upos::kPron},
    {"him", Upos::kPron}, {"her", Upos::kPron}, {"us", Upos::kPron}, {"them", Upos::kPron},
    {"my", Upos::kPron}, {"your", Upos::kPron}, {"his", Upos::kPron}, {"its", Upos::kPron},
    {"our", Upos::kPron}, {"their", Upos::kPron}, {"who", Upos::kPron}, {"whom", Upos::kPron},
    {"whose", Upos::kPron}, {"what", Upos::kPron}, {"it's", Upos::kPron}, {"he's", Upos::kPron},
    {"she's", Upos::kPron}, {"i'm", Upos::kPron}, {"you're", Upos::kPron},
    {"we're", Upos::kPron}, {"they're", Upos::kPron}, {"i've", Upos::kPron},
    {"we've", Upos::kPron}, {"you've", Upos::kPron}, {"they've", Upos::kPron},
    {"i'll", Upos::kPron}, {"he'll", Upos::kPron}, {"she'll", Upos::kPron},
    {"we'll", Upos::kPron}, {"you'll", Upos::kPron}, {"they'll", Upos::kPron},
    // verbs, auxiliaries, contracted negations
    {"be", Upos::kVerb}, {"am", Upos::kVerb}, {"is", Upos::kVerb}, {"are", Upos::kVerb},
    {"was", Upos::kVerb}, {"were", Upos::kVerb}, {"been", Upos::kVerb}, {"being", Upos::kVerb},
    {"have", Upos::kVerb}, {"has", Upos::kVerb}, {"had", Upos::kVerb}, {"having", Upos::kVerb},
    {"do", Upos::kVerb}, {"does", Upos::kVerb}, {"did", Upos::kVerb}, {"done", Upos::kVerb},
    {"doing", Upos::kVerb}, {"will", Upos::kVerb}, {"would", Upos::kVerb},
    {"shall", Upos::kVerb}, {"should", Upos::kVerb}, {"can", Upos::kVerb},
    {"could", Upos::kVerb}, {"may", Upos::kVerb}, {"might", Upos::kVerb},
    {"must", Upos::kVerb}, {"said", Upos::kVerb}, {"say", Upos::kVerb}, {"says", Upos::kVerb},
    {"go", Upos::kVerb}, {"goes", Upos::kVerb}, {"went", Upos::kVerb}, {"gone", Upos::kVerb},
    {"get", Upos::kVerb}, {"gets", Upos::kVerb}, {"got", Upos::kVerb}, {"make", Upos::kVerb},
    {"makes", Upos::kVerb}, {"made", Upos::kVerb}, {"see", Upos::kVerb}, {"sees", Upos::kVerb},
    {"saw", Upos::kVerb}, {"seen", Upos::kVerb}, {"know", Upos::kVerb}, {"knows", Upos::kVerb},
    {"knew", Upos::kVerb}, {"known", Upos::kVerb}, {"think", Upos::kVerb},
    {"thinks", Upos::kVerb}, {"thought", Upos::kVerb}, {"take", Upos::kVerb},
    {"takes", Upos::kVerb}, {"took", Upos::kVerb}, {"taken", Upos::kVerb},
    {"come", Upos::kVerb}, {"comes", Upos::kVerb}, {"came", Upos::kVerb},
    {"want", Upos::kVerb}, {"wants", Upos::kVerb}, {"use", Upos::kVerb}, {"uses", Upos::kVerb},
    {"used", Upos::kVerb}, {"need", Upos::kVerb}, {"needs", Upos::kVerb},
    {"find", Upos::kVerb}, {"found", Upos::kVerb}, {"give", Upos::kVerb}, {"gave", Upos::kVerb},
    {"given", Upos::kVerb}, {"tell", Upos::kVerb}, {"told", Upos::kVerb},
    {"feel", Upos::kVerb}, {"feels", Upos::kVerb}, {"felt", Upos::kVerb},
    {"keep", Upos::kVerb}, {"keeps", Upos::kVerb}, {"kept", Upos::kVerb},
    {"let", Upos::kVerb}, {"lets", Upos::kVerb}, {"let's", Upos::kVerb},
    {"put", Upos::kVerb}, {"puts", Upos::kVerb}, {"seem", Upos::kVerb}, {"seems", Upos::kVerb},
    {"mean", Upos::kVerb}, {"means", Upos::kVerb}, {"meant", Upos::kVerb},
    {"become", Upos::kVerb}, {"becomes", Upos::kVerb}, {"became", Upos::kVerb},
    {"hear", Upos::kVerb}, {"hears", Upos::kVerb}, {"heard", Upos::kVerb},
    {"hold", Upos::kVerb}, {"holds", Upos::kVerb}, {"held", Upos::kVerb},
    {"bring", Upos::kVerb}, {"brings", Upos::kVerb}, {"brought", Upos::kVerb},
    {"write", Upos::kVerb}, {"writes", Upos::kVerb}, {"wrote", Upos::kVerb},
    {"written", Upos::kVerb}, {"read", Upos::kVerb}, {"reads", Upos::kVerb},
    {"stand", Upos::kVerb}, {"stands", Upos::kVerb}, {"stood", Upos::kVerb},
    {"lose", Upos::kVerb}, {"loses", Upos::kVerb}, {"lost", Upos::kVerb},
    {"pay", Upos::kVerb}, {"pays", Upos::kVerb}, {"paid", Upos::kVerb},
    {"meet", Upos::kVerb}, {"meets", Upos::kVerb}, {"met", Upos::kVerb},
    {"send", Upos::kVerb}, {"sends", Upos::kVerb}, {"sent", Upos::kVerb},
    {"build", Upos::kVerb}, {"builds", Upos::kVerb}, {"built", Upos::kVerb},
    {"speak", Upos::kVerb}, {"speaks", Upos::kVerb}, {"spoke", Upos::kVerb},
    {"spoken", Upos::kVerb}, {"win", Upos::kVerb}, {"wins", Upos::kVerb}, {"won", Upos::kVerb},
    {"begin", Upos::kVerb}, {"begins", Upos::kVerb}, {"began", Upos::kVerb},
    {"begun", Upos::kVerb}, {"grow", Upos::kVerb}, {"grows", Upos::kVerb},
    {"grew", Upos::kVerb}, {"grown", Upos::kVerb}, {"break", Upos::kVerb},
    {"breaks", Upos::kVerb}, {"broke", Upos::kVerb}, {"broken", Upos::kVerb},
    {"spend", Upos::kVerb}, {"spends", Upos::kVerb}, {"spent", Upos::kVerb},
    {"rise", Upos::kVerb}, {"rises", Upos::kVerb}, {"rose", Upos::kVerb},
    {"risen", Upos::kVerb}, {"drive", Upos::kVerb}, {"drives", Upos::kVerb},
    {"drove", Upos::kVerb}, {"driven", Upos::kVerb}, {"wear", Upos::kVerb},
    {"wears", Upos::kVerb}, {"wore", Upos::kVerb}, {"worn", Upos::kVerb},
    {"choose", Upos::kVerb}, {"chooses", Upos::kVerb}, {"chose", Upos::kVerb},
    {"chosen", Upos::kVerb}, {"prove", Upos::kVerb}, {"proves", Upos::kVerb},
    {"proved", Upos::kVerb}, {"locate", Upos::kVerb}, {"locates", Upos::kVerb},
    {"sit", Upos::kVerb}, {"sits", Upos::kVerb}, {"sat", Upos::kVerb},
    {"run", Upos::kVerb}, {"runs", Upos::kVerb}, {"ran", Upos::kVerb},
    {"eat", Upos::kVerb}, {"eats", Upos::kVerb}, {"ate", Upos::kVerb}, {"eaten", Upos::kVerb},
    {"live", Upos::kVerb}, {"lives", Upos::kVerb}, {"apply", Upos::kVerb},
    {"reply", Upos::kVerb}, {"fly", Upos::kVerb}, {"flies", Upos::kVerb},
    {"flew", Upos::kVerb}, {"flown", Upos::kVerb},
    {"don't", Upos::kVerb}, {"doesn't", Upos::kVerb}, {"didn't", Upos::kVerb},
    {"can't", Upos::kVerb}, {"won't", Upos::kVerb}, {"isn't", Upos::kVerb},
    {"aren't", Upos::kVerb}, {"wasn't", Upos::kVerb}, {"weren't", Upos::kVerb},
    {"couldn't", Upos::kVerb}, {"wouldn't", Upos::kVerb}, {"shouldn't", Upos::kVerb},
    // adpositions and subordinators
    {"of", Upos::kAdp}, {"in", Upos::kAdp}, {"for", Upos::kAdp}, {"on", Upos::kAdp},
    {"with", Upos::kAdp}, {"at", Upos::kAdp}, {"by", Upos::kAdp}, {"from", Upos::kAdp},
    {"about", Upos::kAdp}, {"into", Upos::kAdp}, {"over", Upos::kAdp}, {"after", Upos::kAdp},
    {"before", Upos::kAdp}, {"between", Upos::kAdp}, {"against", Upos::kAdp},
    {"during", Upos::kAdp}, {"without", Upos::kAdp}, {"under", Upos::kAdp},
    {"around", Upos::kAdp}, {"among", Upos::kAdp}, {"as", Upos::kAdp}, {"that", Upos::kAdp},
    {"if", Upos::kAdp}, {"because", Upos::kAdp}, {"while", Upos::kAdp},
    {"since", Upos::kAdp}, {"until", Upos::kAdp}, {"through", Upos::kAdp},
    {"toward", Upos::kAdp}, {"towards", Upos::kAdp}, {"upon", Upos::kAdp},
    {"via", Upos::kAdp}, {"than", Upos::kAdp}, {"whether", Upos::kAdp},
    {"though", Upos::kAdp}, {"although", Upos::kAdp}, {"unless", Upos::kAdp},
    {"despite", Upos::kAdp}, {"within", Upos::kAdp}, {"across", Upos::kAdp},
    {"behind", Upos::kAdp}, {"beyond", Upos::kAdp}, {"near", Upos::kAdp},
    {"per", Upos::kAdp}, {"except", Upos::kAdp},
    // particles
    {"to", Upos::kPrt}, {"'s", Upos::kPrt},
    // conjunctions
    {"and", Upos::kConj}, {"or", Upos::kConj}, {"but", Upos::kConj}, {"nor", Upos::kConj},
    // adverbs
    {"not", Upos::kAdv}, {"n't", Upos::kAdv}, {"very", Upos::kAdv}, {"too", Upos::kAdv},
    {"also", Upos::kAdv}, {"just", Upos::kAdv}, {"now", Upos::kAdv}, {"then", Upos::kAdv},
    {"here", Upos::kAdv}, {"when", Upos::kAdv}, {"where", Upos::kAdv}, {"why", Upos::kAdv},
    {"how", Upos::kAdv}, {"again", Upos::kAdv}, {"once", Upos::kAdv}, {"never", Upos::kAdv},
    {"always", Upos::kAdv}, {"often", Upos::kAdv}, {"sometimes", Upos::kAdv},
    {"usually", Upos::kAdv}, {"soon", Upos::kAdv}, {"already", Upos::kAdv},
    {"still", Upos::kAdv}, {"yet", Upos::kAdv}, {"quite", Upos::kAdv},
    {"rather", Upos::kAdv}, {"almost", Upos::kAdv}, {"late", Upos::kAdv},
    {"well", Upos::kAdv}, {"even", Upos::kAdv}, {"only", Upos::kAdv},
    {"really", Upos::kAdv}, {"perhaps", Upos::kAdv}, {"maybe", Upos::kAdv},
    {"however", Upos::kAdv}, {"instead", Upos::kAdv}, {"together", Upos::kAdv},
    {"away", Upos::kAdv}, {"ago", Upos::kAdv}, {"else", Upos::kAdv}, {"far", Upos::kAdv},
    {"so", Upos::kAdv}, {"thus", Upos::kAdv}, {"indeed", Upos::kAdv},
    // adjectives (incl. -ing/-ed participial adjectives the suffix rules miss)
    {"last", Upos::kAdj}, {"deep", Upos::kAdj}, {"awful", Upos::kAdj},
    {"compelling", Upos::kAdj}, {"intense", Upos::kAdj}, {"brazilian", Upos::kAdj},
    {"good", Upos::kAdj}, {"better", Upos::kAdj}, {"best", Upos::kAdj}, {"bad", Upos::kAdj},
    {"worse", Upos::kAdj}, {"worst", Upos::kAdj}, {"new", Upos::kAdj}, {"old", Upos::kAdj},
    {"great", Upos::kAdj}, {"small", Upos::kAdj}, {"big", Upos::kAdj}, {"large", Upos::kAdj},
    {"little", Upos::kAdj}, {"high", Upos::kAdj}, {"low", Upos::kAdj}, {"long", Upos::kAdj},
    {"short", Upos::kAdj}, {"own", Upos::kAdj}, {"other", Upos::kAdj}, {"same", Upos::kAdj},
    {"different", Upos::kAdj}, {"able", Upos::kAdj}, {"next", Upos::kAdj},
    {"first", Upos::kAdj}, {"second", Upos::kAdj}, {"third", Upos::kAdj},
    {"few", Upos::kAdj}, {"many", Upos::kAdj}, {"several", Upos::kAdj},
    {"such", Upos::kAdj}, {"whole", Upos::kAdj}, {"real", Upos::kAdj}, {"sure", Upos::kAdj},
    {"free", Upos::kAdj}, {"true", Upos::kAdj}, {"full", Upos::kAdj}, {"strong", Upos::kAdj},
    {"hard", Upos::kAdj}, {"easy", Upos::kAdj}, {"important", Upos::kAdj},
    {"possible", Upos::kAdj}, {"recent", Upos::kAdj}, {"major", Upos::kAdj},
    {"final", Upos::kAdj}, {"similar", Upos::kAdj}, {"entire", Upos::kAdj},
    {"nice", Upos::kAdj}, {"happy", Upos::kAdj}, {"sad", Upos::kAdj}, {"angry", Upos::kAdj},
    {"beautiful", Upos::kAdj}, {"terrible", Upos::kAdj}, {"wonderful", Upos::kAdj},
    {"horrible", Upos::kAdj}, {"amazing", Upos::kAdj}, {"interesting", Upos::kAdj},
    {"boring", Upos::kAdj}, {"exciting", Upos::kAdj}, {"stunning", Upos::kAdj},
    {"charming", Upos::kAdj}, {"engaging", Upos::kAdj}, {"entertaining", Upos::kAdj},
    {"moving", Upos::kAdj}, {"touching", Upos::kAdj}, {"dull", Upos::kAdj},
    {"bland", Upos::kAdj}, {"fresh", Upos::kAdj}, {"stale", Upos::kAdj},
    {"brilliant", Upos::kAdj}, {"dreadful", Upos::kAdj}, {"lousy", Upos::kAdj},
    {"superb", Upos::kAdj}, {"mediocre", Upos::kAdj}, {"tedious", Upos::kAdj},
    {"delightful", Upos::kAdj}, {"painful", Upos::kAdj}, {"crisp", Upos::kAdj},
    {"clumsy", Upos::kAdj}, {"elegant", Upos::kAdj}, {"sloppy", Upos::kAdj},
    {"vivid", Upos::kAdj}, {"lifeless", Upos::kAdj}, {"witty", Upos::kAdj},
    {"humorless", Upos::kAdj}, {"graceful", Upos::kAdj}, {"awkward", Upos::kAdj},
    {"tender", Upos::kAdj}, {"harsh", Upos::kAdj}, {"sweet", Upos::kAdj},
    {"bitter", Upos::kAdj}, {"warm", Upos::kAdj}, {"cold", Upos::kAdj},
    {"funny", Upos::kAdj}, {"tragic", Upos::kAdj}, {"honest", Upos::kAdj},
    {"naked", Upos::kAdj}, {"sacred", Upos::kAdj}, {"tired", Upos::kAdj},
    {"wicked", Upos::kAdj}, {"ugly", Upos::kAdj}, {"silly", Upos::kAdj},
    {"friendly", Upos::kAdj}, {"lovely", Upos::kAdj}, {"jolly", Upos::kAdj},
    {"holy", Upos::kAdj}, {"early", Upos::kAdj}, {"tiny", Upos::kAdj}, {"huge", Upos::kAdj},
    {"vast", Upos::kAdj}, {"grim", Upos::kAdj}, {"bold", Upos::kAdj}, {"keen", Upos::kAdj},
    {"odd", Upos::kAdj}, {"plain", Upos::kAdj}, {"proud", Upos::kAdj}, {"calm", Upos::kAdj},
    {"brave", Upos::kAdj}, {"fierce", Upos::kAdj}, {"gentle", Upos::kAdj},
    {"modest", Upos::kAdj}, {"subtle", Upos::kAdj}, {"sharp", Upos::kAdj},
    // numerals
    {"one", Upos::kNum}, {"two", Upos::kNum}, {"three", Upos::kNum}, {"four", Upos::kNum},
    {"five", Upos::kNum}, {"six", Upos::kNum}, {"seven", Upos::kNum}, {"eight", Upos::kNum},
    {"nine", Upos::kNum}, {"ten", Upos::kNum}, {"zero", Upos::kNum}, {"eleven", Upos::kNum},
    {"twelve", Upos::kNum}, {"twenty", Upos::kNum}, {"thirty", Upos::kNum},
    {"hundred", Upos::kNum}, {"thousand", Upos::kNum}, {"million", Upos::kNum},
    {"billion", Upos::kNum}, {"dozen", Upos::kNum},
    // nouns the suffix rules would otherwise mis-handle
    {"uploading", Upos::kNoun}, {"thing", Upos::kNoun}, {"things", Upos::kNoun},
    {"something", Upos::kNoun}, {"nothing", Upos::kNoun}, {"anything", Upos::kNoun},
    {"everything", Upos::kNoun}, {"morning", Upos::kNoun}, {"evening", Upos::kNoun},
    {"feeling", Upos::kNoun}, {"feelings", Upos::kNoun}, {"meeting", Upos::kNoun},
    {"wedding", Upos::kNoun}, {"painting", Upos::kNoun}, {"ending", Upos::kNoun},
    {"beginning", Upos::kNoun}, {"clothing", Upos::kNoun}, {"spring", Upos::kNoun},
    {"string", Upos::kNoun}, {"speed", Upos::kNoun}, {"trouble", Upos::kNoun},
    {"forest", Upos::kNoun}, {"interest", Upos::kNoun}, {"family", Upos::kNoun},
    {"supply", Upos::kNoun}, {"butterfly", Upos::kNoun}, {"belly", Upos::kNoun},
    {"jelly", Upos::kNoun}, {"rally", Upos::kNoun}, {"ally", Upos::kNoun},
    {"bully", Upos::kNoun}, {"folly", Upos::kNoun}, {"acting", Upos::kNoun},
    {"pacing", Upos::kNoun}, {"writing", Upos::kNoun}, {"storytelling", Upos::kNoun},
    {"filmmaking", Upos::kNoun}, {"casting", Upos::kNoun}, {"editing", Upos::kNoun},
    {"lighting", Upos::kNoun}, {"setting", Upos::kNoun}, {"opening", Upos::kNoun},
};

const std::unordered_map<std::string, Upos>& lexicon() {
  static const std::unordered_map<std::string, Upos> table = [] {
    std::unordered_map<std::string, Upos> t;
    t.reserve(std::size(kLexicon));
    for (const WordRow& row : kLexicon) t.emplace(row.word, row.upos);
    return t;
  }();
  return table;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool looks_numeric(std::string_view s) {
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return true;
  if (s.size() >= 2 && (s[0] == '$' || s[0] == '+' || s[0] == '-') &&
      std::isdigit(static_cast<unsigned char>(s[1]))) {
    return true;
  }
  return false;
}

}  // namespace

Upos RuleTagger::classify(std::string_view word) {
  if (is_punctuation_token(word)) return Upos::kPunct;
  if (looks_numeric(word)) return Upos::kNum;

  const std::string lower = ascii_lower(word);
  const auto& lex = lexicon();
  if (auto it = lex.find(lower); it != lex.end()) return it->second;

  const std::size_t n = lower.size();
  if (ends_with(lower, "'s")) return Upos::kNoun;   // possessives stay nominal
  if (ends_with(lower, "n't")) return Upos::kVerb;  // fused negated auxiliaries
  if (n >= 5 && ends_with(lower, "ly")) return Upos::kAdv;
  if (n >= 6 && ends_with(lower, "ing")) return Upos::kVerb;
  if (n >= 5 && ends_with(lower, "ed")) return Upos::kVerb;
  if (n >= 5 && ends_with(lower, "ful")) return Upos::kAdj;
  if (n >= 6 && ends_with(lower, "ous")) return Upos::kAdj;
  if (n >= 6 && ends_with(lower, "ive")) return Upos::kAdj;
  if (n >= 6 && (ends_with(lower, "able") || ends_with(lower, "ible"))) return Upos::kAdj;

  return Upos::kNoun;
}

std::vector<TaggedToken> RuleTagger::tag(const std::vector<Token>& tokens) const {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(TaggedToken{t, classify(t.text)});
  return out;
}

std::unique_ptr<Tagger> make_tagger(const std::string& spec) {
  if (spec.empty() || spec == "rule") return std::make_unique<RuleTagger>();
  constexpr std::string_view kPrefix = "perceptron:";
  if (spec.rfind(kPrefix, 0) == 0) {
    return std::make_unique<PerceptronTagger>(
        PerceptronTagger::load(spec.substr(kPrefix.size())));
  }
  throw Error(ErrorCode::kUsage, "unknown tagger spec '" + spec + "' (expected 'rule' or 'perceptron:<path>')");
}

}  // namespace nludiag
