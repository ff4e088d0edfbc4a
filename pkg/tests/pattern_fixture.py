"""Hand-tagged 50-document fixture exercising every extraction rule.

Documents are written as compact "word/TAG" strings. Coverage notes are
inline: each group targets one rule, its third-word constraint, document-final
bigrams, or deliberate non-matches.
"""


def _doc(text: str) -> list[tuple[str, str]]:
    pairs = []
    for piece in text.split():
        word, _, tag = piece.rpartition("/")
        pairs.append((word.lower(), tag))
    return pairs


FIFTY_DOCUMENTS = [
    # rule 1 (JJ + NN/NNS), third word anything
    _doc("a/DT great/JJ movie/NN indeed/RB ./."),
    _doc("the/DT old/JJ houses/NNS stood/VBD there/RB ./."),
    _doc("one/CD fine/JJ day/NN came/VBD ./."),
    _doc("a/DT low/JJ budget/NN film/NN ./."),          # third word NN still matches rule 1
    _doc("some/DT strange/JJ scenes/NNS scenes/NNS ./."),
    _doc("that/DT bright/JJ light/NN"),                  # document-final bigram
    # rule 2 (RB/RBR/RBS + JJ), third word not NN nor NNS
    _doc("it/PRP was/VBD very/RB good/JJ ./."),
    _doc("she/PRP seemed/VBD more/RBR happy/JJ than/IN him/PRP ./."),
    _doc("they/PRP are/VBP most/RBS clever/JJ of/IN all/DT ./."),
    _doc("it/PRP is/VBZ truly/RB bad/JJ"),               # document-final bigram
    _doc("a/DT really/RB nice/JJ story/NN ./."),         # blocked: third word NN
    _doc("two/CD quite/RB dull/JJ endings/NNS ./."),     # blocked: third word NNS
    _doc("so/RB good/JJ so/RB often/RB ./."),
    # rule 3 (JJ + JJ), third word not NN nor NNS
    _doc("the/DT film/NN felt/VBD warm/JJ gentle/JJ and/CC slow/JJ ./."),
    _doc("cold/JJ dark/JJ visuals/NNS ruined/VBD it/PRP ./."),  # blocked: third NNS
    _doc("its/PRP$ sharp/JJ witty/JJ script/NN ./."),    # blocked: third NN
    _doc("calm/JJ quiet/JJ"),                            # document-final bigram
    _doc("deep/JJ rich/JJ vivid/JJ tones/NNS ./."),      # JJ JJ JJ: first wins, second blocked by NNS
    # rule 4 (NN/NNS + VB/VBD), third word not NN nor NNS
    _doc("the/DT crowd/NN cheered/VBD loudly/RB ./."),
    _doc("critics/NNS agree/VB with/IN it/PRP ./."),
    _doc("the/DT plot/NN moved/VBD fast/RB ./."),
    _doc("people/NNS left/VBD theaters/NNS early/RB ./."),  # blocked: third NNS
    _doc("a/DT door/NN slammed/VBD shut/JJ ./."),
    _doc("the/DT music/NN soared/VBD"),                  # document-final bigram
    # rule 5 (RB/RBR/RBS + VBN/VBG), third word anything
    _doc("it/PRP was/VBD badly/RB written/VBN overall/RB ./."),
    _doc("she/PRP kept/VBD quietly/RB laughing/VBG through/IN it/PRP ./."),
    _doc("a/DT score/NN more/RBR polished/VBN albums/NNS ./."),  # third NNS fine for rule 5
    _doc("most/RBS loved/VBN scenes/NNS ./."),
    _doc("steadily/RB improving/VBG"),                   # document-final bigram
    # mixed documents with several matches
    _doc("a/DT good/JJ story/NN badly/RB told/VBN ./."),
    _doc("the/DT cast/NN tried/VBD very/RB hard/JJ ./."),
    _doc("fans/NNS waited/VBD for/IN a/DT truly/RB grand/JJ finale/NN ./."),
    _doc("slow/JJ scenes/NNS dragged/VBD on/IN forever/RB ./."),
    _doc("an/DT odd/JJ choice/NN of/IN hugely/RB troubled/VBN actors/NNS ./."),
    _doc("the/DT crew/NN worked/VBD hard/RB on/IN weak/JJ dialogue/NN ./."),
    # overlapping bigrams sharing a token
    _doc("nice/JJ clean/JJ cuts/NNS flow/VB well/RB ./."),
    _doc("very/RB tense/JJ thriller/NN beats/NNS land/VB ./."),
    _doc("the/DT house/NN burned/VBD slowly/RB down/RP ./."),
    # no matches at all
    _doc("it/PRP is/VBZ what/WP it/PRP is/VBZ ./."),
    _doc("we/PRP watched/VBD it/PRP twice/RB ./."),
    _doc("the/DT movie/NN of/IN the/DT year/NN ./."),
    _doc("they/PRP will/MD see/VB it/PRP soon/RB ./."),
    _doc("run/VB fast/RB now/RB ./."),
    # OTHER and rare tags never match the rule sets
    _doc("wow/UH such/PDT zeal/NN !/."),
    _doc("the/DT sequel/NN ://: a/DT mess/NN ./."),
    _doc("chapter/NN 3/CD begins/VBZ here/RB ./."),
    _doc("meta/XX tags/XX confuse/XX parsers/XX ./."),
    # single-token and two-token edge documents
    _doc("bravo/UH"),
    _doc("nice/JJ try/NN"),                              # document-final rule 1
    _doc("ever/RBR growing/VBG crowds/NNS came/VBD ./."),  # rule 5, third NNS allowed
]

assert len(FIFTY_DOCUMENTS) == 50
