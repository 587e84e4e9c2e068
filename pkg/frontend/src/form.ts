/** Scenario form state and validation; submit stays disabled until every
 * field satisfies the scenario invariants. */

import type { ScenarioRequestBody, TransportMode } from './types.js';

export interface ScenarioFormState {
  fixture: string;
  origin: number | null;
  destination: number | null;
  containers: number;
  deadlineHours: number;
  carbonPrice: number;
  allowedModes: TransportMode[];
  travelTimeCv: number;
  samples: number;
  seed: number | null;
}

export function defaultFormState(fixture = 'fixture14'): ScenarioFormState {
  return {
    fixture,
    origin: null,
    destination: null,
    containers: 250,
    deadlineHours: 36,
    carbonPrice: 0.25,
    allowedModes: ['Highway', 'Rail'],
    travelTimeCv: 0.08,
    samples: 10000,
    seed: 7,
  };
}

export type FormErrors = Partial<Record<keyof ScenarioFormState, string>>;

export function validateForm(state: ScenarioFormState): FormErrors {
  const errors: FormErrors = {};
  if (!state.fixture) errors.fixture = 'pick a network';
  if (state.origin === null) errors.origin = 'pick an origin';
  if (state.destination === null) errors.destination = 'pick a destination';
  if (!Number.isInteger(state.containers) || state.containers < 1) {
    errors.containers = 'containers must be a positive integer';
  }
  if (!Number.isFinite(state.deadlineHours) || state.deadlineHours <= 0) {
    errors.deadlineHours = 'deadline must be > 0 hours';
  }
  if (!Number.isFinite(state.carbonPrice) || state.carbonPrice < 0) {
    errors.carbonPrice = 'carbon price must be >= 0';
  }
  if (state.allowedModes.length === 0) {
    errors.allowedModes = 'allow at least one mode';
  }
  if (!Number.isFinite(state.travelTimeCv) || state.travelTimeCv < 0) {
    errors.travelTimeCv = 'travel-time variability must be >= 0';
  }
  if (!Number.isInteger(state.samples) || state.samples < 1) {
    errors.samples = 'samples must be a positive integer';
  }
  if (state.seed !== null && (!Number.isInteger(state.seed) || state.seed < 0)) {
    errors.seed = 'seed must be a non-negative integer';
  }
  return errors;
}

export function canSubmit(state: ScenarioFormState): boolean {
  return Object.keys(validateForm(state)).length === 0;
}

export function buildRequestBody(state: ScenarioFormState): ScenarioRequestBody {
  const errors = validateForm(state);
  if (Object.keys(errors).length > 0) {
    throw new Error(`form invalid: ${Object.values(errors).join('; ')}`);
  }
  const scenario: ScenarioRequestBody['scenario'] = {
    origin: state.origin as number,
    destination: state.destination as number,
    containers: state.containers,
    deadline_hours: state.deadlineHours,
    carbon_price_usd_per_kg: state.carbonPrice,
    allowed_modes: [...state.allowedModes],
    travel_time_cv: state.travelTimeCv,
  };
  if (state.seed !== null) {
    scenario.seed = state.seed;
  }
  return {
    network_ref: state.fixture,
    scenario,
    options: { samples: state.samples, k_pool: 16, want_map: true },
  };
}

/** Re-populate the form from a run's stored request (form round-trip). */
export function formFromRequest(request: {
  network_ref?: string;
  scenario: ScenarioRequestBody['scenario'];
  options: ScenarioRequestBody['options'];
}): ScenarioFormState {
  const s = request.scenario;
  return {
    fixture: request.network_ref ?? '',
    origin: s.origin,
    destination: s.destination,
    containers: s.containers,
    deadlineHours: s.deadline_hours,
    carbonPrice: s.carbon_price_usd_per_kg,
    allowedModes: [...s.allowed_modes],
    travelTimeCv: s.travel_time_cv ?? 0,
    samples: request.options.samples,
    seed: s.seed ?? null,
  };
}
