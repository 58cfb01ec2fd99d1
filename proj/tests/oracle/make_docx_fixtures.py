#!/usr/bin/env python3
# Copyright 2026 The polex Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the .docx test fixtures under tests/fixtures.

Packages are assembled by hand with zipfile so every XML element is known:
no styles part, no settings, only what a reader needs. Run from the
repository root; the output is committed.
"""

import os
import shutil
import zipfile
from xml.sax.saxutils import escape

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")

CONTENT_TYPES = """<?xml version="1.0" encoding="UTF-8" standalone="yes"?>
<Types xmlns="http://schemas.openxmlformats.org/package/2006/content-types">
<Default Extension="rels" ContentType="application/vnd.openxmlformats-package.relationships+xml"/>
<Default Extension="xml" ContentType="application/xml"/>
<Override PartName="/word/document.xml" ContentType="application/vnd.openxmlformats-officedocument.wordprocessingml.document.main+xml"/>
<Override PartName="/docProps/app.xml" ContentType="application/vnd.openxmlformats-officedocument.extended-properties+xml"/>
</Types>"""

ROOT_RELS = """<?xml version="1.0" encoding="UTF-8" standalone="yes"?>
<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">
<Relationship Id="rId1" Type="http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument" Target="word/document.xml"/>
{extra}</Relationships>"""

APP_REL = ('<Relationship Id="rId2" Type="http://schemas.openxmlformats.org/officeDocument/'
           '2006/relationships/extended-properties" Target="docProps/app.xml"/>\n')

APP = """<?xml version="1.0" encoding="UTF-8" standalone="yes"?>
<Properties xmlns="http://schemas.openxmlformats.org/officeDocument/2006/extended-properties"><Pages>{pages}</Pages></Properties>"""

DOC_HEAD = ('<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
            '<w:document xmlns:w="http://schemas.openxmlformats.org/wordprocessingml/2006/main">'
            '<w:body>')
DOC_TAIL = '<w:sectPr/></w:body></w:document>'


def run(text, highlight=None):
    """A run; '\\n' becomes <w:br/> and '\\t' becomes <w:tab/>."""
    props = f'<w:rPr><w:highlight w:val="{highlight}"/></w:rPr>' if highlight else ""
    parts = []
    chunk = ""
    for ch in text:
        if ch in "\n\t":
            if chunk:
                parts.append(f'<w:t xml:space="preserve">{escape(chunk)}</w:t>')
                chunk = ""
            parts.append("<w:br/>" if ch == "\n" else "<w:tab/>")
        else:
            chunk += ch
    if chunk:
        parts.append(f'<w:t xml:space="preserve">{escape(chunk)}</w:t>')
    return f"<w:r>{props}{''.join(parts)}</w:r>"


def para(*runs):
    body = "".join(r if r.startswith("<w:r>") else run(r) for r in runs)
    return f"<w:p>{body}</w:p>"


def put(archive, name, text):
    # Fixed timestamps keep regenerated fixtures byte-identical.
    info = zipfile.ZipInfo(name, date_time=(2024, 9, 1, 0, 0, 0))
    info.compress_type = zipfile.ZIP_DEFLATED
    archive.writestr(info, text)


def write_docx(path, paragraphs, pages=None):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with zipfile.ZipFile(path, "w", zipfile.ZIP_DEFLATED) as z:
        put(z, "[Content_Types].xml", CONTENT_TYPES)
        put(z, "_rels/.rels", ROOT_RELS.format(extra=APP_REL if pages is not None else ""))
        put(z, "word/document.xml", DOC_HEAD + "".join(paragraphs) + DOC_TAIL)
        if pages is not None:
            put(z, "docProps/app.xml", APP.format(pages=pages))


# 17 paragraph elements, 3 of them whitespace-only.
S01 = [
    para("SENTENZA"),
    para("La Corte ha affermato che ", "“il nome costituisce un diritto inviolabile”",
         " (Cass. n. 26972/2008)"),
    para(),
    para("Le spese vanno poste a carico dell'Erario (Corte Cost. 217/2019)"),
    para("Secondo Cass. “testo citato” senza altro rilievo."),
    para('Il ricorso, proposto dal sig. Rossi, è "infondato", come osserva il Tribunale.'),
    para("   "),
    para("La giurisprudenza ha sostenuto che la domanda è tardiva (Cass. Civ. 3877/2020)."),
    para("Il collegio richiama «principio uno» e «principio due»."),
    para("Le parti hanno depositato memorie nei termini di legge."),
    para("Testo con «virgolette miste” e la CASSAZIONE."),
    para(run("Il principio è consolidato\n(Cass., sez. I, 22/06/2016 n. 12962)")),
    para(run("\t")),
    para("Tra l'altro TRIB. Milano ha deciso “così”."),
    para("Come il consesso ha chiarito, ‘la norma è chiara’."),
    para("P.Q.M."),
    para("Rigetta il ricorso (v. Corte Cost. n. 120/2001)"),
]

S02 = [
    para("ORDINANZA"),
    para(run("La Suprema "), run("Corte, a Sezioni Unite, ha statuito che "),
         run("“la condotta va valutata "), run("nel suo complesso”.")),
    para("Si tratta di casi “che interrogano la coscienza” (cfr. Cass. S.U. Civili n. 12193/19)"),
    para("Il giudice deve tener conto del nuovo prenome (Cass. Civ. 3877/2020)"),
    para("sent. 22.06.2016 n. 12962 e Civ. Cass., UU. SS., n. 26972/2008 sono richiamate."),
    para("Il Tribunale di Roma, con la sentenza n. 45/2021, ha deciso diversamente."),
]

S03 = [
    para("DECRETO"),
    para("Il ricorrente chiede la sospensione dell'esecuzione."),
    para("Nulla osta."),
]


def main():
    corpus = os.path.join(ROOT, "corpus")
    write_docx(os.path.join(corpus, "s01.docx"), S01, pages=12)
    write_docx(os.path.join(corpus, "s02.docx"), S02, pages=3)
    write_docx(os.path.join(corpus, "s03.docx"), S03)

    # A paragraph list of ["A", "", "B"].
    write_docx(os.path.join(ROOT, "docx", "a_blank_b.docx"), [para("A"), para(), para("B")])

    # Directory with one corrupt package among three files.
    corrupt = os.path.join(ROOT, "corrupt")
    os.makedirs(corrupt, exist_ok=True)
    shutil.copy(os.path.join(corpus, "s02.docx"), os.path.join(corrupt, "a.docx"))
    with open(os.path.join(corpus, "s01.docx"), "rb") as f:
        data = f.read()
    with open(os.path.join(corrupt, "b.docx"), "wb") as f:
        f.write(data[: len(data) // 2])
    shutil.copy(os.path.join(corpus, "s03.docx"), os.path.join(corrupt, "c.docx"))

    # Mixed directory: two packages, one plaintext file, one unrecognized file.
    mixed = os.path.join(ROOT, "mixed")
    os.makedirs(mixed, exist_ok=True)
    shutil.copy(os.path.join(corpus, "s01.docx"), os.path.join(mixed, "s01.docx"))
    shutil.copy(os.path.join(corpus, "s02.docx"), os.path.join(mixed, "s02.docx"))
    with open(os.path.join(mixed, "notes.txt"), "w", encoding="utf-8", newline="\n") as f:
        f.write("Prima riga\ndel primo blocco.\n\n\n  \nSecondo blocco (Cass. n. 1/2019)\n")
    with open(os.path.join(mixed, "readme.md"), "w", encoding="utf-8", newline="\n") as f:
        f.write("not a judgment\n")

    highlights = os.path.join(ROOT, "highlights")
    # Yellow split across two runs, one blue, one light gray.
    write_docx(os.path.join(highlights, "three_colours.docx"), [
        para("Premessa senza evidenziazioni."),
        para(run("La Corte ha affermato che "), run("“ab” ", "yellow"),
             run("(Cass. 1/2019)", "yellow"), run(" e ha proseguito.")),
        para(),
        para(run("Il principio "), run("va applicato anche ai contratti in corso (Cass. n. 5/2020)", "blue"),
             run(".")),
        para(run("In generale ", None), run("la buona fede integra il contratto", "lightGray")),
    ])
    # Cyan counts as blue; green is not part of the scheme.
    write_docx(os.path.join(highlights, "cyan_and_green.docx"), [
        para(run("il danno va provato (Cass. n. 7/2018)", "cyan")),
        para(run("nota a margine", "green")),
    ])
    # Adjacent runs of different colours stay separate; an empty run does not split a group.
    write_docx(os.path.join(highlights, "adjacent.docx"), [
        para(run("prima parte", "yellow"), run("", None), run(" seconda parte", "yellow"),
             run("terza", "darkGray")),
    ])
    write_docx(os.path.join(highlights, "none.docx"), [para("Nessuna evidenziazione qui.")])


if __name__ == "__main__":
    main()
