"""
pdde test paketi (katmanlara göre: core, domain, infrastructure, application, presentation)
"""
