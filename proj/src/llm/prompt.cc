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


#include <stdexcept>

#include "polex/llm.h"

namespace polex::llm {
namespace {

// Canonical prompt, as submitted to the model.
PromptText italian() {
  PromptText t;
  t.body =
      "Estrai i paragrafi in cui c’è la parola CORTE, TRIBUNALE, GIURISPRUDENZA, COLLEGIO, CONSESSO, "
      "CASSAZIONE e simili seguita da un passaggio tra virgolette. "
      "Anche i paragrafi in cui c’è un passaggio tra virgolette seguito da un numero tra parentesi. "
      "Anche i paragrafi fino al punto a capo in cui figurano le parole ‘la giurisprudenza ha sostenuto "
      "che…’, ‘come la corte ha statuito…’, ‘affermata giurisprudenza…’, ‘il principio stabilito dalla "
      "corte…’, seguiti o preceduti da un numero. "
      "Anche tutte le frasi che prima del punto terminano con un numero tra parentesi.";
  t.examples_heading = "Esempi:";
  t.few_shot_examples = {
      "La stessa Corte di Cassazione, pronunciandosi a Sezioni Unite, ha di recente affermato che si tratta "
      "di casi “che interrogano profondamente la coscienza individuale e collettiva, ponendo questioni "
      "delicate e complesse, suscettibili di soluzioni differenziate”.",
      "Si tratta di casi “che interrogano profondamente la coscienza individuale e collettiva, ponendo "
      "questioni delicate e complesse, suscettibili di soluzioni differenziate” (cfr. Cass. S.U. Civili "
      "n. 12193/19).",
      "La Corte Costituzionale, nella sentenza n. 120/2001, ha chiaramente affermato che il nome inteso come "
      "il primo ed immediato segno distintivo, costituisce uno dei diritti inviolabili della persona protetti "
      "dalla Carta ex art. 2 Cost., cui si riconosce il carattere di clausola aperta, con conseguente "
      "possibilità di evincere, dalla lettura combinata dell'art. 6 c.c., comma 3, e degli artt. 2 e 22 "
      "Cost., la natura di diritto soggettivo insopprimibile della persona.",
      "Il riconoscimento del primario diritto alla identità sessuale, sotteso alla disposta rettificazione "
      "dell'attribuzione di sesso, rende consequenziale la rettificazione del prenome, che non va "
      "necessariamente convertito nel genere scaturente dalla rettificazione, dovendo il giudice tener conto "
      "del nuovo prenome, indicato dalla persona, pur se del tutto diverso dal prenome precedente, ove tale "
      "indicazione sia legittima e conforme al nuovo stato (Cass. Civ. 3877/2020).",
      "Le spese della ctu, nella misura liquidata con separato decreto e operata la dimidiazione prevista "
      "dall'art. 130 tusg, vanno poste a carico dell'Erario (Corte Cost. 217/2019).",
      "La Corte, dopo aver affermato che il legislatore […], aggiunge: “il legislatore […]”.",
      "…(Cass. Civ. 3877/2020).",
      "…(Corte Cost. 217/2019).",
  };
  t.directives =
      "COPIA PEDISSEQUAMENTE I PASSAGGI DAL SINGOLO FILE CARICATO. ESPORTA PEDISSEQUAMENTE COSI’ COME SONO "
      "DAL SINGOLO FILE CARICATO. NON INVENTARE. NON RIASSUMERE. NON ASSEMBLARE. "
      "Segui dettagliatamente le istruzioni.";
  return t;
}

PromptText english() {
  PromptText t;
  t.body =
      "Extract the paragraphs in which there is the word COURT, TRIBUNAL, JURISPRUDENCE, COLLEGE, "
      "CONSESSION, CASSATION and similar followed by a passage in quotation marks. "
      "Also paragraphs where there is a passage in quotation marks followed by a number in parenthesis. "
      "Also paragraphs until a new one where the expressions ‘jurisprudence has held that...’, ‘as the court "
      "has ruled...’, ‘established jurisprudence...’, ‘the principle established by the court...’, followed "
      "or preceded by a number. "
      "Also all phrase that end with a number in brackets before the full stop.";
  t.examples_heading = "Examples:";
  t.few_shot_examples = {
      "The Court of Cassation itself, ruling in United Sections, recently stated that these are cases “which "
      "profoundly question individual and collective conscience, posing delicate and complex questions, "
      "susceptible to differentiated solutions”.",
      "These are cases “that deeply question individual and collective conscience, posing delicate and "
      "complex questions, susceptible to differentiated solutions” (see Cass. Civil U.S. n. 12193/19).",
      "The Constitutional Court, in sentence no. 120/2001, has clearly stated that the name, understood as "
      "the first and immediate distinctive sign, constitutes one of the inviolable rights of the person "
      "protected by the Charter pursuant to art. 2 of the Constitution, which is recognized as an open "
      "clause, with the consequent possibility of deducing, from the combined reading of the art. 6 c.c., "
      "paragraph 3, and articles 2 and 22 of the Constitution, the nature of an irrepressible subjective "
      "right of the person.",
      "The recognition of the primary right to sexual identity, underlying the required rectification of "
      "the attribution of sex, makes the rectification of the first name consequential, which does not "
      "necessarily have to be converted into the gender resulting from the rectification, as the judge must "
      "take into account the new first name, indicated by the person, even if completely different from the "
      "previous name, where this indication is legitimate and compliant with the new status (Cass. Civ. "
      "3877/2020).",
      "The expenses of the ctu, in the amount paid by separate decree and the halving provided for by the "
      "art. 130 tusg, must be paid by the Treasury (Cost. Court 217/2019).",
      "The Court, after stating that the legislator [...], adds: “the legislator [...]”.",
      "…(Cass. Civ. 3877/2020).",
      "…(Cost. Court 217/2019).",
  };
  t.directives =
      "EXACTLY COPY THE PASSAGES FROM THE SINGLE UPLOADED FILE. EXACTLY EXPORT THEM AS THEY ARE FROM THE "
      "SINGLE UPLOADED FILE. DO NOT INVENT. DO NOT SUMMARIZE. DO NOT ASSEMBLE. "
      "Follow the instructions in detail.";
  return t;
}

}  // namespace

std::string to_string(Language language) { return language == Language::kItalian ? "it" : "en"; }

std::optional<Language> parse_language(std::string_view code) {
  if (code == "it") return Language::kItalian;
  if (code == "en") return Language::kEnglish;
  return std::nullopt;
}

PromptTemplate PromptTemplate::standard() {
  PromptTemplate p;
  p.texts[Language::kItalian] = italian();
  p.texts[Language::kEnglish] = english();
  return p;
}

std::string build_prompt(const PromptTemplate& prompt, Language language) {
  const auto it = prompt.texts.find(language);
  if (it == prompt.texts.end()) {
    throw std::invalid_argument("prompt template has no '" + to_string(language) + "' text");
  }
  const PromptText& t = it->second;
  std::string out = t.body;
  if (!t.few_shot_examples.empty()) {
    out += "\n\n" + t.examples_heading;
    for (const auto& ex : t.few_shot_examples) out += "\n- " + ex;
  }
  if (!t.directives.empty()) out += "\n\n" + t.directives;
  return out;
}

}  // namespace polex::llm
