"""Word → Penn-Treebank tag lexicon for the built-in tagger.

Coverage is tuned for company descriptions and slogans: function words are
(near) exhaustive, content words cover the high-frequency marketing
vocabulary, and everything else falls through to the suffix and casing
heuristics in ``postags``. Lookups are case-insensitive.
"""
from __future__ import annotations

_BY_TAG: dict[str, str] = {
    # --- closed classes -------------------------------------------------
    "DT": """the a an this that these those all each every some any no both
        either neither another such""",
    "PRP": """i you he it we they me him us them myself yourself ourselves
        themselves itself everyone everybody someone somebody hers yours
        ours theirs mine""",
    "PRP$": "my your his her its our their",
    "IN": """in of for on at by with from about into onto over under between
        through during without within against across after before along
        around behind beyond near since until upon toward towards per like
        as unlike via amid among despite except off out up down inside
        outside underneath throughout""",
    "TO": "to",
    "CC": "and or but nor yet plus",
    "MD": "can could will would may might must shall should",
    "EX": "",
    "WP": "who what whom",
    "WP$": "whose",
    "WDT": "which whichever",
    "WRB": "how when where why whenever wherever",
    "UH": "hello hi hey wow yes no? oh",
    # --- adverbs ---------------------------------------------------------
    "RB": """just simply always never now here there very too also only
        really quite well even still often sometimes again soon together
        already everywhere anywhere nearby forever almost away back
        ahead once twice not""",
    "RBR": "sooner",
    "RBS": "most least",
    # --- adjectives ------------------------------------------------------
    "JJ": """good great new fresh fast flexible free easy simple smart powerful
        professional top local digital online affordable reliable trusted
        innovative creative unique premium custom modern perfect healthy
        happy big small large leading versatile personal private commercial
        residential global international national effective efficient
        secure safe clean green organic natural beautiful friendly tasty
        delicious quick strong independent complete full special certified
        licensed insured dedicated comprehensive exclusive luxurious
        sustainable expert own other same whole real true right wrong
        available open ready proud emergency? welcome favourite favorite
        ultimate essential ideal finest mexican? everyday? universal
        rugged bluetooth? cross-channel? quality? affordable dynamic
        dependable trustworthy versatile next low high long short hot cold
        fine nice bright dark wide deep rich poor young old early late
        daily weekly monthly annual awesome amazing stunning elegant
        stylish handmade bespoke artisan boutique budget cheap everyday""",
    "JJR": "better more larger smaller higher lower greater faster cheaper",
    "JJS": "best most? finest? largest smallest highest lowest greatest",
    # --- verbs -----------------------------------------------------------
    "VB": """be do have get make go see know come give take find let help
        offer provide serve deliver create design discover explore learn
        grow build boost drink eat save shop buy sell join start stop try
        love trust choose book call contact visit order enjoy feel live
        work play win meet keep bring move turn run send show tell ask use
        need want plan manage support protect improve increase reduce
        transform empower unlock achieve connect share rent hire repair fix
        install maintain clean? paint decorate cook bake brew craft teach
        train coach advise consult convert boost browse click subscribe
        register apply earn invest insure finance lend borrow ship track
        pack store host stream download upload search browse compare solve
        automate optimize optimise simplify streamline accelerate elevate
        maximise maximize""",
    "VBZ": "is has does says",
    "VBP": "are am",
    "VBD": "was were went said got gave took came made found",
    "VBN": "been done made? given taken known seen",
    "VBG": "being",
    # --- numbers ---------------------------------------------------------
    "CD": """one two three four five six seven eight nine ten eleven twelve
        twenty thirty forty fifty hundred thousand million billion zero""",
    # --- nouns -----------------------------------------------------------
    "NN": """company business service solution product team customer client
        quality experience home house office space software platform
        technology tech marketing design web website app data system tool
        network security health care food coffee tea pizza burrito taco
        restaurant shop store brand agency studio group firm partner
        expert? specialist consultant lawyer doctor dentist school college
        university student training course event travel hotel tour car auto
        repair? insurance finance bank money loan credit tax accounting
        account energy gas power water electricity construction builder
        building equipment furniture kitchen bathroom garden cleaning pest
        plumber plumbing electrician roofing paint? photography photo video
        film music art fashion beauty hair salon spa fitness gym yoga sport
        game toy book? news media print printing sign gift flower wedding
        party rental property estate land farm pet dog cat vet clinic lead
        generation automation optimization optimisation consultancy
        footwear candy soda pop milk town city world country people family
        life style way day year time number idea value price cost deal
        support sale growth success result market industry project
        management collaboration development developer engineer engineering
        consulting advertising manufacturing staffing learning housing
        clothing catering landscaping lighting heating cooling plumbing?
        welding recruitment logistics transport storage removal removals?
        boat bike bicycle motorcycle truck van machine part supply supplier
        distributor wholesale retail fabric textile jewellery jewelry watch
        glass window door roof floor flooring tile carpet furniture?
        mattress bed sofa chair table desk lamp decor interior exterior
        architecture architect survey surveyor valuation mortgage broker
        realtor* law legal justice firm? practice surgery pharmacy
        medicine therapy physio chiropractor optometrist audiology
        nutrition diet recipe bakery butcher grocer grocery cafe bar pub
        brewery winery vineyard distillery kiosk warehouse point
        terminal pos software? cloud dashboard funnel campaign budget
        budgeting analytics insight strategy branding identity logo
        content copywriting seo sem ppc email newsletter blog podcast
        radio television tv channel audience community member membership
        subscription plan pricing package bundle upgrade feature benefit
        advantage mission vision goal passion craft craftsmanship heritage
        tradition innovation future present past moment occasion
        celebration holiday vacation adventure journey destination guide
        map ticket booking reservation seat room suite apartment condo
        villa cottage cabin lodge resort camp playground park trail beach
        mountain river lake ocean forest wildlife nature environment
        climate solar wind battery charger charging station vehicle fleet
        driver delivery courier parcel mail post office? branch outlet
        showroom gallery museum theatre theater cinema studio? stage
        concert festival fair expo conference seminar workshop webinar
        class lesson tutorial certification diploma degree career job
        vacancy candidate employee employer staff payroll pension benefit?
        wellness mindfulness meditation massage facial manicure pedicure
        barber grooming style? stylist designer? artist author writer
        editor publisher press release story article report whitepaper
        case? portfolio testimonial review rating award prize trophy
        emergency upholstery piece consumer user access control
        advisory compliance advisor adviser homework explanation
        problem solver algebra math mathematics physics chemistry biology
        science research lab laboratory test exam assessment tutor tutoring
        childcare daycare nanny babysitter elder eldercare senior
        veteran hero champion winner leader pioneer innovator disruptor
        startup enterprise corporation organisation organization nonprofit
        charity foundation trust? fund funding investment investor capital
        equity asset wealth portfolio? retirement estate? will? probate
        divorce custody immigration visa passport citizenship residency""",
}

# Words flagged with '?' or '*' above carry a genuine tag ambiguity in real
# text; we commit to the listed tag (first occurrence wins on duplicates)
# because the tagger must be deterministic.


def _build() -> dict[str, str]:
    table: dict[str, str] = {}
    for tag, blob in _BY_TAG.items():
        for raw in blob.split():
            word = raw.rstrip("?*").lower()
            if word and word not in table:
                table[word] = tag
    return table


LEXICON: dict[str, str] = _build()
