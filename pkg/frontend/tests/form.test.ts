import { describe, expect, it } from 'vitest';

import { buildRequestBody, canSubmit, defaultFormState, formFromRequest, validateForm } from '../src/form.js';

describe('scenario form validation', () => {
  it('is invalid until endpoints are chosen', () => {
    const state = defaultFormState();
    expect(canSubmit(state)).toBe(false);
    state.origin = 1;
    state.destination = 14;
    expect(canSubmit(state)).toBe(true);
  });

  it('rejects each invariant violation with a field error', () => {
    const state = { ...defaultFormState(), origin: 1, destination: 14 };
    expect(validateForm({ ...state, containers: 0 })).toHaveProperty('containers');
    expect(validateForm({ ...state, containers: 2.5 })).toHaveProperty('containers');
    expect(validateForm({ ...state, deadlineHours: 0 })).toHaveProperty('deadlineHours');
    expect(validateForm({ ...state, carbonPrice: -0.1 })).toHaveProperty('carbonPrice');
    expect(validateForm({ ...state, allowedModes: [] })).toHaveProperty('allowedModes');
    expect(validateForm({ ...state, travelTimeCv: -1 })).toHaveProperty('travelTimeCv');
    expect(validateForm({ ...state, samples: 0 })).toHaveProperty('samples');
    expect(validateForm({ ...state, seed: -3 })).toHaveProperty('seed');
    expect(validateForm(state)).toEqual({});
  });

  it('builds the wire request body', () => {
    const state = { ...defaultFormState(), origin: 1, destination: 14 };
    const body = buildRequestBody(state);
    expect(body.network_ref).toBe('fixture14');
    expect(body.scenario).toMatchObject({
      origin: 1,
      destination: 14,
      containers: 250,
      deadline_hours: 36,
      carbon_price_usd_per_kg: 0.25,
      allowed_modes: ['Highway', 'Rail'],
      seed: 7,
    });
    expect(body.options).toEqual({ samples: 10000, k_pool: 16, want_map: true });
  });

  it('omits the seed when unset and throws on invalid state', () => {
    const state = { ...defaultFormState(), origin: 1, destination: 14, seed: null };
    expect('seed' in buildRequestBody(state).scenario).toBe(false);
    expect(() => buildRequestBody({ ...state, containers: -1 })).toThrow(/containers/);
  });

  it('round-trips a stored request back into the form', () => {
    const state = { ...defaultFormState(), origin: 1, destination: 14 };
    const body = buildRequestBody(state);
    const reloaded = formFromRequest({
      network_ref: body.network_ref,
      scenario: body.scenario,
      options: body.options,
    });
    expect(reloaded).toEqual(state);
    expect(buildRequestBody(reloaded)).toEqual(body);
  });
});
