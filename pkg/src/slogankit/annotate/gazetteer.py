"""Gazetteer data for the built-in entity recogniser.

Entries are matched case-sensitively in their canonical casing at word
boundaries. The lists are sized for desk-scale corpora and the bundled
fixtures — a production deployment should plug in a real tagger through
``annotate.remote`` instead of extending these tables indefinitely.
"""
from __future__ import annotations

# Countries, cities, states — geopolitical entities.
GPE = tuple("""
Belgium Waregem Brussels Antwerp Ghent
France Paris Lyon Germany Berlin Munich Hamburg Netherlands Amsterdam
Rotterdam Italy Rome Milan Spain Madrid Barcelona Portugal Lisbon
Switzerland Zurich Geneva Austria Vienna Norway Oslo Sweden Stockholm
Denmark Copenhagen Finland Helsinki Ireland Dublin Poland Warsaw
Greece Athens Turkey Istanbul Russia Moscow Ukraine Kyiv
England London Manchester Liverpool Birmingham Leeds Bristol Norwich
Norfolk Scotland Edinburgh Glasgow Wales Cardiff
Canada Toronto Vancouver Montreal Ottawa Calgary
Mexico Brazil Argentina Chile Peru Colombia
China Beijing Shanghai Shenzhen Japan Tokyo Osaka Korea Seoul
India Mumbai Delhi Bangalore Chennai Dehradun Uttarakhand Tamilnadu
Singapore Malaysia Indonesia Thailand Bangkok Vietnam Hanoi
Philippines Manila
Australia Sydney Melbourne Brisbane Perth Adelaide
NZ Auckland Wellington Christchurch Hamilton Dunedin Queenstown
USA America Miami Orlando Tampa Jacksonville Chicago Boston Seattle
Portland Denver Austin Dallas Houston Phoenix Atlanta Nashville
California Texas Florida Ontario Quebec
""".split()) + (
    "New Zealand",
    "United States",
    "United Kingdom",
    "Great Britain",
    "Hong Kong",
    "New York",
    "Los Angeles",
    "San Francisco",
    "San Diego",
    "Las Vegas",
    "New Orleans",
    "Ho Chi Minh City",
    "Tamil Nadu",
    "South Africa",
    "Cape Town",
    "New Delhi",
    "Kuala Lumpur",
    "New England",
    "Palo Alto",
)

# Nationalities and similar group adjectives.
NORP = tuple("""
Belgian American British German French Italian Spanish Portuguese Dutch
Norwegian Swedish Danish Finnish Swiss Austrian Australian Canadian
Mexican Brazilian Japanese Chinese Korean Indian Thai Vietnamese
Singaporean Malaysian Indonesian Filipino European African Asian Irish
Scottish Welsh English Greek Turkish Russian Polish Ukrainian Kiwi Latin
""".split())

# Non-GPE locations: continents, regions, natural features.
LOCATION = tuple("""
Europe Asia Africa Oceania Antarctica Scandinavia Midwest
""".split()) + (
    "North America",
    "South America",
    "Latin America",
    "Middle East",
    "Southeast Asia",
    "Silicon Valley",
    "Pacific Ocean",
    "Atlantic Ocean",
    "the Pacific",
    "East Coast",
    "West Coast",
)

# Common given names; a capitalized bigram starting with one of these is
# treated as a person mention.
PERSON_FIRST_NAMES = frozenset("""
John Mary James Sarah David Michael Anna Peter Paul Emma Lisa Mark Tom
Jane Robert Linda Susan William Richard Joseph Thomas Daniel Matthew
Laura Kevin Brian George Edward Steven Andrew Rachel Karen Nancy Betty
Helen Sandra Donna Carol Ruth Sharon Michelle Jessica Amanda Melissa
Deborah Stephanie Rebecca Emily Chris Christopher Anthony Charles Frank
Scott Eric Stephen Jonathan Justin Brandon Samuel Benjamin Patrick Jack
Dennis Jerry Alice Julia Grace Sophia Olivia Emma Charlotte Amelia Henry
Oliver Leo Oscar Harry Alfie Archie Yiping Vishakha Khang Hy
""".split())

MONTHS = tuple("""
January February March April May June July August September October
November December
""".split())
