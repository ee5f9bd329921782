"""Generate the frozen markup-stripping fixture from the independent oracle.

Run once from the repo root; the resulting JSON is committed and never
regenerated silently. Keeping the generator next to the fixture documents
how the expected values came to be.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1]))
from oracles import oracle_strip_markup  # noqa: E402

INPUTS = [
    # plain text passes through
    "Hallo Welt",
    "Das Wetter ist heute schön.",
    "",
    "   ",
    "Umlaute: äöü ÄÖÜ ß bleiben.",
    # tags
    "<p>Hallo</p>",
    "<div class=\"x\">Text</div>",
    "<br/>Zeile",
    "Wort<br>Wort",
    "<a href=\"https://x.de\">Link</a> dahinter",
    "<ul><li>eins</li><li>zwei</li></ul>",
    "<img src='bild.png' alt='Bild'>",
    "<!-- Kommentar -->Sichtbar",
    "<span\nclass=\"mehrzeilig\">Inhalt</span>",
    "<<b>>doppelt",
    "nur < kleiner bleibt",
    "a < b und b > a",
    "<p>Erster Absatz</p>\n<p>Zweiter Absatz</p>",
    "<h1>Leichte Sprache</h1><p>Ein Satz.</p>",
    "Text mit <em>Betonung</em> mittendrin.",
    # entities
    "A  &amp;  B",
    "&lt;p&gt; ist kein Tag mehr",
    "Kaffee &uuml;berall",
    "&#65;BC",
    "&#x41;BC",
    "&amp;amp; doppelt kodiert",
    "&unbekannt; bleibt nicht",
    "Tom &amp; Jerry &copy; 2020",
    "&nbsp;eng&nbsp;",
    "Grö&szlig;e",
    # URLs
    "Mehr auf www.ndr.de hier",
    "Siehe https://www.beispiel.de/pfad?x=1 dort",
    "http://kurz.de",
    "www.erste.de und www.zweite.de",
    "Klammern (https://x.de/y) weg",
    "Ende www.schluss.de",
    "wwwkein.treffer hier",
    "Der Link https://a.b/c&amp;d=1 verschwindet",
    # control characters
    "Null\x00Byte",
    "Glocke\x07hier",
    "Tab\tbleibt Leerzeichen",
    "Seite\x0cumbruch",
    # whitespace
    "Viele    Leerzeichen",
    "Zeile eins\nZeile zwei",
    "Zeile eins\n\n\nZeile zwei",
    "Windows\r\nZeilen",
    "  führend und folgend  ",
    "Mix \t von\t Tabs",
    "Satz eins. \n Satz zwei.",
    # combinations
    "<p>Auf www.seite.de steht:&nbsp;&quot;Hallo&quot;</p>",
    "<div>A &amp; B\nC &lt; D</div>\x07",
]


def main() -> None:
    cases = [{"input": t, "expected": oracle_strip_markup(t)} for t in INPUTS]
    out = pathlib.Path(__file__).with_name("markup_cases.json")
    out.write_text(json.dumps(cases, ensure_ascii=False, indent=1) + "\n", "utf-8")
    print(f"wrote {len(cases)} cases to {out}")


if __name__ == "__main__":
    main()
